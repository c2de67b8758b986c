#include "printstiff/offset.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace printstiff {

namespace {

// Miter length / offset distance allowed at reflex corners before beveling.
constexpr double kMiterLimit = 2.;
// Parameter snap for intersections landing on segment endpoints.
constexpr double kParamEps = 1e-12;
// Distance of the side probe used to classify split segments.
constexpr double kProbe = 1e-6;

Ring without_short_edges(const Ring &ring)
{
    Ring out;
    out.reserve(ring.size());
    for (const Point2 &p : ring)
        if (out.empty() || norm(p - out.back()) > 1e-9)
            out.push_back(p);
    while (out.size() > 1 && norm(out.front() - out.back()) <= 1e-9)
        out.pop_back();
    return out;
}

// Slices put extra points along each facet; a straight run offsets to a
// straight run, so they only add work and noise.
Ring without_collinear(Ring ring)
{
    constexpr double kTol = kGeomEps;
    bool             changed = true;
    while (changed && ring.size() > 3) {
        changed = false;
        Ring out;
        out.reserve(ring.size());
        const size_t n = ring.size();
        for (size_t i = 0; i < n; ++i) {
            const Point2 a   = out.empty() ? ring[(i + n - 1) % n] : out.back();
            const Point2 b   = ring[i];
            const Point2 c   = ring[(i + 1) % n];
            const double len = norm(c - a);
            if (len > 0. && std::abs(cross(b - a, c - a)) <= kTol * len && dot(b - a, c - b) > 0.) {
                changed = true;
                continue;
            }
            out.push_back(b);
        }
        if (out.size() < 3)
            break;
        ring = std::move(out);
    }
    return ring;
}

// Translated ring plus, per edge i -> i+1, the direction of the source edge it
// came from (zero for bevel edges).
struct RawRing
{
    Ring                pts;
    std::vector<Point2> source;
};

RawRing raw_offset(const Ring &ring, double d)
{
    const size_t n = ring.size();
    RawRing      raw;
    Ring        &out = raw.pts;
    out.reserve(n + n / 4);
    for (size_t i = 0; i < n; ++i) {
        const Point2 prev = ring[(i + n - 1) % n];
        const Point2 cur  = ring[i];
        const Point2 next = ring[(i + 1) % n];
        const Point2 d0   = (1. / norm(cur - prev)) * (cur - prev);
        const Point2 d1   = (1. / norm(next - cur)) * (next - cur);
        const Point2 n0   = left_normal(d0);
        const Point2 n1   = left_normal(d1);
        const double c1   = 1. + dot(n0, n1);
        const bool   convex = cross(d0, d1) >= 0.;
        if (c1 > 1e-12 && (convex || c1 >= 2. / (kMiterLimit * kMiterLimit))) {
            out.push_back(cur + (d / c1) * (n0 + n1));
            raw.source.push_back(d1);
        } else {
            out.push_back(cur + d * n0);
            raw.source.push_back({});
            out.push_back(cur + d * n1);
            raw.source.push_back(d1);
        }
    }
    return raw;
}

struct Segment
{
    int    ring;
    int    a, b; // node ids
    Point2 source;
};

// Edges running against their source edge belong to a part of the region
// that was swept past its own medial axis.
bool flipped(Point2 a, Point2 b, Point2 source)
{
    return dot(b - a, source) < 0.;
}

struct UnionFind
{
    std::vector<int> parent;
    int add()
    {
        parent.push_back(int(parent.size()));
        return parent.back();
    }
    int find(int x)
    {
        while (parent[x] != x)
            x = parent[x] = parent[parent[x]];
        return x;
    }
    void unite(int a, int b)
    {
        a = find(a);
        b = find(b);
        if (a != b)
            parent[std::max(a, b)] = std::min(a, b);
    }
};

int winding_all(Point2 p, const std::vector<Ring> &rings)
{
    int wn = 0;
    for (const Ring &r : rings)
        wn += winding_number(p, r);
    return wn;
}

double point_segment_distance(Point2 p, Point2 a, Point2 b)
{
    const Point2 ab = b - a;
    const double l2 = dot(ab, ab);
    const double t  = l2 > 0. ? std::clamp(dot(p - a, ab) / l2, 0., 1.) : 0.;
    return norm(p - (a + t * ab));
}

// Side probes must stay in the face next to the piece, so they may not reach
// as far as any other segment.
double probe_distance(Point2 mid, int self, const std::vector<Segment> &segs, const std::vector<Point2> &nodes)
{
    double dmin = kProbe;
    for (int j = 0; j < int(segs.size()); ++j)
        if (j != self)
            dmin = std::min(dmin, point_segment_distance(mid, nodes[segs[j].a], nodes[segs[j].b]));
    return dmin > 0. ? 0.25 * dmin : kProbe * 1e-6;
}

// Keeps the parts of the raw rings that bound the region of positive winding.
std::vector<Ring> resolve_positive(const std::vector<RawRing> &raw)
{
    std::vector<Ring> rings;
    for (const RawRing &r : raw)
        rings.push_back(r.pts);

    std::vector<Point2>  nodes;
    std::vector<Segment> segs;
    UnionFind            uf;
    for (int r = 0; r < int(rings.size()); ++r) {
        const int first = int(nodes.size());
        const int n     = int(rings[r].size());
        for (int i = 0; i < n; ++i) {
            nodes.push_back(rings[r][i]);
            uf.add();
        }
        for (int i = 0; i < n; ++i)
            segs.push_back({r, first + i, first + (i + 1) % n, raw[r].source[i]});
    }

    // Sweep over x to find crossing segment pairs.
    std::vector<int> order(segs.size());
    std::iota(order.begin(), order.end(), 0);
    auto minx = [&](int s) { return std::min(nodes[segs[s].a].x, nodes[segs[s].b].x); };
    auto maxx = [&](int s) { return std::max(nodes[segs[s].a].x, nodes[segs[s].b].x); };
    std::stable_sort(order.begin(), order.end(), [&](int l, int r) { return minx(l) < minx(r); });

    std::vector<std::vector<std::pair<double, int>>> splits(segs.size());
    bool             any = false;
    std::vector<int> active;
    for (int si : order) {
        const double x0 = minx(si);
        std::erase_if(active, [&](int s) { return maxx(s) < x0; });
        const Point2 a  = nodes[segs[si].a];
        const Point2 b  = nodes[segs[si].b];
        const double y0 = std::min(a.y, b.y), y1 = std::max(a.y, b.y);
        for (int sj : active) {
            const Segment &o = segs[sj];
            if (o.a == segs[si].a || o.a == segs[si].b || o.b == segs[si].a || o.b == segs[si].b)
                continue;
            const Point2 c = nodes[o.a];
            const Point2 d = nodes[o.b];
            if (std::max(c.y, d.y) < y0 || std::min(c.y, d.y) > y1)
                continue;
            const Point2 r     = b - a;
            const Point2 s     = d - c;
            const double denom = cross(r, s);
            if (std::abs(denom) <= 1e-12 * norm(r) * norm(s)) {
                // Parallel: only collinear overlaps matter.
                const double lr = norm(r), ls = norm(s);
                if (lr == 0. || ls == 0. || std::abs(cross(c - a, r)) > 1e-9 * lr)
                    continue;
                auto place = [&](int seg, Point2 p0, Point2 dir, double len2, int node) {
                    const double t = dot(nodes[node] - p0, dir) / len2;
                    if (t > kParamEps && t < 1. - kParamEps) {
                        splits[seg].push_back({t, node});
                        any = true;
                    } else if (std::abs(t) <= kParamEps) {
                        uf.unite(segs[seg].a, node);
                    } else if (std::abs(t - 1.) <= kParamEps) {
                        uf.unite(segs[seg].b, node);
                    }
                };
                place(si, a, r, lr * lr, o.a);
                place(si, a, r, lr * lr, o.b);
                place(sj, c, s, ls * ls, segs[si].a);
                place(sj, c, s, ls * ls, segs[si].b);
                continue;
            }
            const double t = cross(c - a, s) / denom;
            const double u = cross(c - a, r) / denom;
            if (t < -kParamEps || t > 1. + kParamEps || u < -kParamEps || u > 1. + kParamEps)
                continue;
            any = true;
            const int ni = t <= kParamEps ? segs[si].a : t >= 1. - kParamEps ? segs[si].b : -1;
            const int nj = u <= kParamEps ? o.a : u >= 1. - kParamEps ? o.b : -1;
            if (ni >= 0 && nj >= 0) {
                uf.unite(ni, nj);
            } else if (ni >= 0) {
                splits[sj].push_back({u, ni});
            } else if (nj >= 0) {
                splits[si].push_back({t, nj});
            } else {
                const int node = uf.add();
                nodes.push_back(a + t * r);
                splits[si].push_back({t, node});
                splits[sj].push_back({u, node});
            }
        }
        active.push_back(si);
    }

    std::vector<Ring> out;
    if (!any) {
        // Rings are simple and mutually disjoint: classify each as a whole.
        int first_seg = 0;
        for (size_t r = 0; r < rings.size(); first_seg += int(rings[r].size()), ++r) {
            const Ring &ring = rings[r];
            double      back = 0., total = 0.;
            for (size_t i = 0; i < ring.size(); ++i) {
                const Point2 a = ring[i], b = ring[(i + 1) % ring.size()];
                total += norm(b - a);
                if (flipped(a, b, raw[r].source[i]))
                    back += norm(b - a);
            }
            if (back > 0.5 * total)
                continue;
            size_t longest = 0;
            double best    = -1.;
            for (size_t i = 0; i < ring.size(); ++i) {
                const double l = norm(ring[(i + 1) % ring.size()] - ring[i]);
                if (l > best) {
                    best    = l;
                    longest = i;
                }
            }
            const Point2 p0    = ring[longest];
            const Point2 p1    = ring[(longest + 1) % ring.size()];
            const Point2 dir   = (1. / best) * (p1 - p0);
            const Point2 mid   = 0.5 * (p0 + p1);
            const Point2 probe = mid - probe_distance(mid, first_seg + int(longest), segs, nodes) * left_normal(dir);
            if (winding_all(probe, rings) == 0)
                out.push_back(ring);
        }
        return out;
    }

    // Split, classify by the winding just right of each piece, then relink.
    struct Piece
    {
        int  a, b;
        bool flipped;
    };
    std::vector<Piece>            pieces;
    std::set<std::pair<int, int>> seen;
    for (size_t s = 0; s < segs.size(); ++s) {
        auto &sp = splits[s];
        sp.push_back({0., segs[s].a});
        sp.push_back({1., segs[s].b});
        std::stable_sort(sp.begin(), sp.end(), [](auto &l, auto &r) { return l.first < r.first; });
        for (size_t k = 0; k + 1 < sp.size(); ++k) {
            const int na = uf.find(sp[k].second);
            const int nb = uf.find(sp[k + 1].second);
            if (na == nb)
                continue;
            const Point2 p0  = nodes[na];
            const Point2 p1  = nodes[nb];
            const double len = norm(p1 - p0);
            if (len == 0.)
                continue;
            if (!seen.insert({na, nb}).second)
                continue;
            const Point2 mid  = 0.5 * (p0 + p1);
            const Point2 side = (probe_distance(mid, int(s), segs, nodes) / len) * left_normal(p1 - p0);
            if (winding_all(mid - side, rings) <= 0 && winding_all(mid + side, rings) >= 1)
                pieces.push_back({na, nb, flipped(p0, p1, segs[s].source)});
        }
    }

    std::vector<std::vector<int>> outgoing(nodes.size());
    for (int i = 0; i < int(pieces.size()); ++i)
        outgoing[pieces[i].a].push_back(i);
    std::vector<char> used(pieces.size(), 0);
    for (int start = 0; start < int(pieces.size()); ++start) {
        if (used[start])
            continue;
        Ring   ring;
        int    cur   = start;
        bool   ok    = false;
        double back  = 0.;
        double total = 0.;
        used[cur]    = 1;
        for (size_t guard = 0; guard <= pieces.size(); ++guard) {
            ring.push_back(nodes[pieces[cur].a]);
            const double len = norm(nodes[pieces[cur].b] - nodes[pieces[cur].a]);
            total += len;
            if (pieces[cur].flipped)
                back += len;
            const int node = pieces[cur].b;
            if (node == pieces[start].a) {
                ok = true;
                break;
            }
            const Point2 din  = nodes[node] - nodes[pieces[cur].a];
            int          next = -1;
            double       best = 0.;
            for (int cand : outgoing[node]) {
                if (used[cand])
                    continue;
                const Point2 dout = nodes[pieces[cand].b] - nodes[node];
                const double turn = std::atan2(cross(din, dout), dot(din, dout));
                if (next < 0 || turn < best) {
                    best = turn;
                    next = cand;
                }
            }
            if (next < 0) {
                break;
            }
            used[next] = 1;
            cur        = next;
        }
        if (ok && ring.size() >= 3 && back <= 0.5 * total)
            out.push_back(std::move(ring));
    }
    return out;
}

} // namespace

LayerContour offset_inward(const LayerContour &contour, double distance)
{
    if (distance <= 0.)
        return contour;
    std::vector<RawRing> raw;
    raw.reserve(contour.loops.size());
    for (const Loop &loop : contour.loops) {
        Ring r = without_collinear(without_short_edges(loop.points));
        if (r.size() >= 3)
            raw.push_back(raw_offset(r, distance));
    }
    std::vector<Ring> kept = resolve_positive(raw);
    std::erase_if(kept, [](const Ring &r) { return std::abs(signed_area(r)) < 1e-10; });
    return make_contour(contour.z, std::move(kept));
}

} // namespace printstiff
