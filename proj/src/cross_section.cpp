#include "printstiff/cross_section.hpp"

#include "printstiff/errors.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <numbers>

namespace printstiff {

std::string_view to_string(SectionModel m)
{
    return m == SectionModel::DiscSquare ? "disc_square" : "stadium";
}

std::string_view to_string(Membership m)
{
    return m == Membership::Center ? "center" : "footprint";
}

SectionModel parse_section_model(std::string_view s)
{
    if (s == "disc_square")
        return SectionModel::DiscSquare;
    if (s == "stadium")
        return SectionModel::Stadium;
    throw ConfigError("unknown section model '" + std::string(s) + "' (expected disc_square or stadium)");
}

Membership parse_membership(std::string_view s)
{
    if (s == "center")
        return Membership::Center;
    if (s == "footprint")
        return Membership::Footprint;
    throw ConfigError("unknown membership rule '" + std::string(s) + "' (expected center or footprint)");
}

double filament_section_area(const PrintConfig &cfg, SectionModel kind)
{
    const double t = cfg.layer_thickness;
    if (!(t > 0.))
        throw DegenerateFilament("layer thickness must be positive for a filament section");
    const double cap = std::numbers::pi * 0.25 * t * t;
    if (kind == SectionModel::DiscSquare)
        return cap + t * t;
    if (!(cfg.line_width >= t))
        throw DegenerateFilament("stadium section needs line width >= layer thickness");
    return (cfg.line_width - t) * t + cap;
}

namespace {

double point_segment_distance(Point2 p, Point2 a, Point2 b)
{
    const Point2 ab = b - a;
    const double l2 = dot(ab, ab);
    const double t  = l2 > 0. ? std::clamp(dot(p - a, ab) / l2, 0., 1.) : 0.;
    return norm(p - (a + t * ab));
}

bool segments_cross(Point2 a, Point2 b, Point2 c, Point2 d)
{
    const double d1 = cross(b - a, c - a), d2 = cross(b - a, d - a);
    const double d3 = cross(d - c, a - c), d4 = cross(d - c, b - c);
    return ((d1 > 0. && d2 < 0.) || (d1 < 0. && d2 > 0.)) && ((d3 > 0. && d4 < 0.) || (d3 < 0. && d4 > 0.));
}

double segment_distance(Point2 a, Point2 b, Point2 c, Point2 d)
{
    if (segments_cross(a, b, c, d))
        return 0.;
    return std::min({point_segment_distance(a, c, d), point_segment_distance(b, c, d),
                     point_segment_distance(c, a, b), point_segment_distance(d, a, b)});
}

} // namespace

FilamentGrid count_filament_sections(const LayerContour &contour, const PrintConfig &cfg, Membership membership)
{
    FilamentGrid grid;
    grid.spacing_h = cfg.line_width;
    grid.spacing_v = cfg.layer_thickness;
    if (contour.empty())
        return grid;
    const BoundingBox2 bb = bounding_box(contour);
    grid.phase            = {bb.min.x + 0.5 * grid.spacing_h, bb.min.y + 0.5 * grid.spacing_v};

    struct Edge
    {
        Point2 a, b;
    };
    std::vector<Edge> edges;
    for (const Loop &loop : contour.loops)
        for (size_t i = 0; i < loop.points.size(); ++i)
            edges.push_back({loop.points[i], loop.points[(i + 1) % loop.points.size()]});

    // Footprint: a stadium whose core segment is (w - t) long and whose caps
    // have radius t/2.
    const double half_core = 0.5 * std::max(0., grid.spacing_h - grid.spacing_v);
    const double radius    = 0.5 * std::min(grid.spacing_h, grid.spacing_v);

    std::vector<std::pair<double, int>> xs;
    std::vector<const Edge *>           near;
    for (long j = 0;; ++j) {
        const double y = grid.phase.y + double(j) * grid.spacing_v;
        if (y >= bb.max.y)
            break;
        // Signed crossings of the row, nonzero rule.
        xs.clear();
        for (const Edge &e : edges) {
            const bool up   = e.a.y <= y && e.b.y > y;
            const bool down = e.b.y <= y && e.a.y > y;
            if (!up && !down)
                continue;
            const double x = e.a.x + (y - e.a.y) / (e.b.y - e.a.y) * (e.b.x - e.a.x);
            xs.push_back({x, up ? 1 : -1});
        }
        std::sort(xs.begin(), xs.end());
        if (membership == Membership::Footprint) {
            near.clear();
            for (const Edge &e : edges)
                if (std::max(e.a.y, e.b.y) > y - radius - kGeomEps && std::min(e.a.y, e.b.y) < y + radius + kGeomEps)
                    near.push_back(&e);
        }
        // Edges going up cross left-to-right with the solid on their left,
        // i.e. the winding drops by one; walk intervals of positive winding.
        int    wn   = 0;
        double from = 0.;
        for (const auto &[x, dir] : xs) {
            const int next = wn - dir;
            if (wn <= 0 && next > 0) {
                from = x;
            } else if (wn > 0 && next <= 0) {
                const double i0 = std::ceil((from - grid.phase.x) / grid.spacing_h);
                const double i1 = std::ceil((x - grid.phase.x) / grid.spacing_h);
                for (double i = std::max(i0, 0.); i < i1; ++i) {
                    if (membership == Membership::Center) {
                        ++grid.n_cross;
                        continue;
                    }
                    const double cx = grid.phase.x + i * grid.spacing_h;
                    const Point2 a{cx - half_core, y}, b{cx + half_core, y};
                    const bool   fits = std::none_of(near.begin(), near.end(), [&](const Edge *e) {
                        return segment_distance(a, b, e->a, e->b) < radius - kGeomEps;
                    });
                    if (fits)
                        ++grid.n_cross;
                }
            }
            wn = next;
        }
    }
    return grid;
}

LayerSectionArea layer_area_xy(const LayerContour &contour, const PrintConfig &cfg, SectionModel kind,
                               Membership membership)
{
    LayerSectionArea out;
    out.section_area = filament_section_area(cfg, kind);
    out.grid         = count_filament_sections(contour, cfg, membership);
    out.area         = double(out.grid.n_cross) * out.section_area;
    if (out.grid.n_cross == 0)
        throw ZeroArea("no filament cross-section fits inside the contour");
    return out;
}

} // namespace printstiff
