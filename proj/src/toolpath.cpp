#include "printstiff/toolpath.hpp"

#include "printstiff/errors.hpp"
#include "printstiff/offset.hpp"

#include <algorithm>
#include <numbers>

namespace printstiff {

namespace {

// Slack keeping beads that merely touch the region boundary.
constexpr double kBandEps = 1e-9;

void collect_loops(const LayerContour &c, PathSet &paths, double &length)
{
    for (const Loop &loop : c.loops) {
        paths.rings.push_back(loop.points);
        length += ring_length(loop.points);
    }
}

} // namespace

WallPaths wall_paths(const LayerContour &contour, const PrintConfig &cfg)
{
    WallPaths out;
    const double w = cfg.line_width;
    for (int k = 1; k <= cfg.wall_line_count; ++k) {
        const LayerContour wall = offset_inward(contour, (k - 0.5) * w);
        if (wall.empty())
            break;
        collect_loops(wall, out.paths, out.wall_length);
        ++out.wall_count;
    }
    out.collapsed = cfg.wall_line_count > 0 && out.wall_count == 0 && !contour.empty();
    out.inner     = cfg.wall_line_count > 0 ? offset_inward(contour, cfg.wall_line_count * w) : contour;
    return out;
}

double raster_angle(InfillPattern pattern, int layer_index)
{
    const bool even = layer_index % 2 == 0;
    switch (pattern) {
    case InfillPattern::Concentric: return 0.;
    case InfillPattern::Lines0_90: return even ? 0. : 0.5 * std::numbers::pi;
    case InfillPattern::Lines45_neg45:
    case InfillPattern::ZigZag: return even ? 0.25 * std::numbers::pi : -0.25 * std::numbers::pi;
    }
    return 0.;
}

std::vector<std::vector<std::pair<double, double>>> raster_passes(const LayerContour &region, double spacing)
{
    std::vector<std::vector<std::pair<double, double>>> passes;
    if (region.empty())
        return passes;
    const BoundingBox2 bb = bounding_box(region);

    std::vector<Segment2> edges;
    for (const Loop &loop : region.loops)
        for (size_t i = 0; i < loop.points.size(); ++i)
            edges.push_back({loop.points[i], loop.points[(i + 1) % loop.points.size()]});

    std::vector<std::pair<double, double>> blocked;
    for (int k = 0;; ++k) {
        const double center = bb.min.y + 0.5 * spacing + k * spacing;
        if (center - 0.5 * spacing >= bb.max.y - kBandEps)
            break;
        const double lo = center - 0.5 * spacing + kBandEps;
        const double hi = center + 0.5 * spacing - kBandEps;

        // x-ranges where some edge crosses the bead band.
        blocked.clear();
        for (const Segment2 &e : edges) {
            const double ylo = std::min(e.a.y, e.b.y), yhi = std::max(e.a.y, e.b.y);
            if (yhi <= lo || ylo >= hi)
                continue;
            if (e.a.y == e.b.y) {
                blocked.push_back({std::min(e.a.x, e.b.x), std::max(e.a.x, e.b.x)});
                continue;
            }
            const double t0 = std::clamp((lo - e.a.y) / (e.b.y - e.a.y), 0., 1.);
            const double t1 = std::clamp((hi - e.a.y) / (e.b.y - e.a.y), 0., 1.);
            const double x0 = e.a.x + t0 * (e.b.x - e.a.x);
            const double x1 = e.a.x + t1 * (e.b.x - e.a.x);
            blocked.push_back({std::min(x0, x1), std::max(x0, x1)});
        }
        std::sort(blocked.begin(), blocked.end());

        std::vector<std::pair<double, double>> free;
        double reach = blocked.empty() ? bb.max.x : blocked.front().second;
        for (size_t i = 1; i < blocked.size(); ++i) {
            if (blocked[i].first > reach) {
                const Point2 mid{0.5 * (reach + blocked[i].first), center};
                if (contains(region, mid))
                    free.push_back({reach, blocked[i].first});
            }
            reach = std::max(reach, blocked[i].second);
        }
        passes.push_back(std::move(free));
    }
    return passes;
}

InfillPaths infill_paths(const LayerContour &inner, InfillPattern pattern, const PrintConfig &cfg, int layer_index)
{
    InfillPaths out;
    if (inner.empty())
        return out;
    const double w = cfg.line_width;

    if (pattern == InfillPattern::Concentric) {
        for (int k = 1;; ++k) {
            const LayerContour ring = offset_inward(inner, (k - 0.5) * w);
            if (ring.empty())
                break;
            // Rings from opposite sides would overlap past this point; their
            // beads cannot both be deposited.
            if (offset_inward(inner, k * w - 1e-3 * w).empty())
                break;
            collect_loops(ring, out.paths, out.infill_length);
            ++out.passes;
        }
        return out;
    }

    out.raster_angle         = raster_angle(pattern, layer_index);
    const LayerContour local = transformed(inner, -out.raster_angle);
    const auto         passes = raster_passes(local, w);
    const double       y0     = bounding_box(local).min.y + 0.5 * w;
    auto to_world = [&](double x, double y) { return rotate(Point2{x, y}, out.raster_angle); };
    out.passes = int(passes.size());

    if (pattern != InfillPattern::ZigZag) {
        for (size_t k = 0; k < passes.size(); ++k)
            for (const auto &[x0, x1] : passes[k]) {
                out.infill_length += x1 - x0;
                const double y = y0 + double(k) * w;
                out.paths.segments.push_back({to_world(x0, y), to_world(x1, y)});
            }
        return out;
    }

    // Zig-zag: the serpentine turns along the region boundary, so each pass
    // stops half a bead short of the boundary at both ends and consecutive
    // passes are joined by one-bead-long connectors.
    std::vector<int> usable(passes.size(), 0);
    for (size_t k = 0; k < passes.size(); ++k) {
        const double y = y0 + double(k) * w;
        for (const auto &[x0, x1] : passes[k]) {
            if (x1 - x0 <= w)
                continue;
            ++usable[k];
            out.infill_length += x1 - x0 - w;
            out.paths.segments.push_back({to_world(x0 + 0.5 * w, y), to_world(x1 - 0.5 * w, y)});
        }
    }
    for (size_t k = 0; k + 1 < passes.size(); ++k) {
        const int links = std::min(usable[k], usable[k + 1]);
        out.infill_length += links * w;
        // Connector geometry alternates sides; the first usable interval of
        // each pass is used as its anchor.
        if (links > 0) {
            const double y     = y0 + double(k) * w;
            const auto  &a     = passes[k].front();
            const double x     = k % 2 == 0 ? a.second - 0.5 * w : a.first + 0.5 * w;
            for (int l = 0; l < links; ++l)
                out.paths.segments.push_back({to_world(x, y), to_world(x, y + w)});
        }
    }
    return out;
}

LayerArea layer_area_z(const LayerContour &contour, const PrintConfig &cfg, int layer_index)
{
    LayerArea out;
    LayerToolpath &tp = out.toolpath;
    tp.layer_index    = layer_index;
    tp.contour_area   = contour_area(contour);
    if (contour.empty())
        return out;

    const WallPaths   walls  = wall_paths(contour, cfg);
    const InfillPaths infill = infill_paths(walls.inner, cfg.infill_pattern, cfg, layer_index);
    tp.wall_length     = walls.wall_length;
    tp.infill_length   = infill.infill_length;
    tp.d_path          = tp.wall_length + tp.infill_length;
    tp.deposited_area  = tp.d_path * cfg.line_width;
    tp.uncovered_area  = tp.contour_area - tp.deposited_area;
    tp.walls_collapsed = walls.collapsed;
    out.area           = tp.deposited_area;
    if (tp.d_path <= 0.)
        throw ZeroArea("layer " + std::to_string(layer_index) + ": no bead fits inside a contour of area " +
                       std::to_string(tp.contour_area) + " mm2");
    return out;
}

PathSet layer_paths(const LayerContour &contour, const PrintConfig &cfg, int layer_index)
{
    const WallPaths walls = wall_paths(contour, cfg);
    PathSet         paths = walls.paths;
    paths.append(infill_paths(walls.inner, cfg.infill_pattern, cfg, layer_index).paths);
    return paths;
}

} // namespace printstiff
