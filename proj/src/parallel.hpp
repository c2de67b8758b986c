#pragma once

#include <algorithm>
#include <thread>
#include <vector>

namespace printstiff::detail {

// Runs fn(i) for i in [0, n) over contiguous chunks. fn must only write to
// slot i of its outputs, which keeps results independent of the thread count.
template<class Fn>
void parallel_for(int n, unsigned threads, Fn &&fn)
{
    threads = std::clamp(threads, 1u, unsigned(std::max(n, 1)));
    if (threads == 1) {
        for (int i = 0; i < n; ++i)
            fn(i);
        return;
    }
    const int                 chunk = (n + int(threads) - 1) / int(threads);
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < threads; ++t) {
        const int begin = std::min(n, int(t) * chunk);
        const int end   = std::min(n, int(t + 1) * chunk);
        pool.emplace_back([begin, end, &fn] {
            for (int i = begin; i < end; ++i)
                fn(i);
        });
    }
}

} // namespace printstiff::detail
