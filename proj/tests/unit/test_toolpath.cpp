#include "printstiff/errors.hpp"
#include "printstiff/oracle.hpp"
#include "printstiff/toolpath.hpp"

#include <doctest.h>

#include <algorithm>

#include <numbers>

using namespace printstiff;

namespace {

PrintConfig no_walls(InfillPattern p)
{
    PrintConfig cfg;
    cfg.wall_line_count = 0;
    cfg.infill_pattern  = p;
    return cfg;
}

double raster_of(const PathSet &paths, double width, double cell)
{
    std::vector<oracle::Stroke> strokes;
    for (const Segment2 &s : paths.segments)
        strokes.push_back({s.a, s.b});
    return oracle::raster_area(paths.rings, strokes, width, cell);
}

const LayerContour &circle()
{
    static const LayerContour c = make_contour(0., {regular_polygon({0, 0}, 12.7, 256)});
    return c;
}

} // namespace

TEST_CASE("two walls on a 10 mm square")
{
    const WallPaths w = wall_paths(make_contour(0., {rectangle_ring(0, 0, 10, 10)}), PrintConfig{});
    CHECK(w.wall_count == 2);
    CHECK(w.wall_length == doctest::Approx(4. * 9.7 + 4. * 9.1));
    CHECK_FALSE(w.collapsed);
    CHECK(w.inner.area == doctest::Approx(8.8 * 8.8));
}

TEST_CASE("contour thinner than a bead has no walls")
{
    const WallPaths w = wall_paths(make_contour(0., {rectangle_ring(0, 0, 0.2, 5)}), PrintConfig{});
    CHECK(w.wall_count == 0);
    CHECK(w.wall_length == 0.);
    CHECK(w.collapsed);
}

TEST_CASE("walls of a 64-gon circle")
{
    const WallPaths w = wall_paths(make_contour(0., {regular_polygon({0, 0}, 12.7, 64)}), PrintConfig{});
    CHECK(w.wall_length == doctest::Approx(2. * std::numbers::pi * (12.55 + 12.25)).epsilon(0.01));
}

TEST_CASE("lines on a 9 mm square")
{
    const LayerContour sq  = make_contour(0., {rectangle_ring(0, 0, 9, 9)});
    const PrintConfig  cfg = no_walls(InfillPattern::Lines0_90);
    for (int layer : {0, 1}) {
        const InfillPaths p = infill_paths(sq, InfillPattern::Lines0_90, cfg, layer);
        CHECK(p.passes == 30);
        CHECK(p.paths.segments.size() == 30);
        CHECK(p.infill_length == doctest::Approx(270.));
    }
}

TEST_CASE("concentric on a 9 mm square")
{
    const InfillPaths p = infill_paths(make_contour(0., {rectangle_ring(0, 0, 9, 9)}), InfillPattern::Concentric,
                                       PrintConfig{}, 0);
    double expect = 0.;
    for (int k = 1; k <= 15; ++k)
        expect += 4. * (9. - (2 * k - 1) * 0.3);
    CHECK(expect == doctest::Approx(270.));
    CHECK(p.passes == 15);
    CHECK(p.infill_length == doctest::Approx(expect));
}

TEST_CASE("empty inner region has no infill")
{
    for (InfillPattern p :
         {InfillPattern::Concentric, InfillPattern::ZigZag, InfillPattern::Lines0_90, InfillPattern::Lines45_neg45})
        CHECK(infill_paths(LayerContour{}, p, PrintConfig{}, 0).infill_length == 0.);
}

TEST_CASE("layer area from the deposited path")
{
    const LayerArea a = layer_area_z(make_contour(0., {rectangle_ring(0, 0, 9, 9)}), no_walls(InfillPattern::Lines0_90), 0);
    CHECK(a.area == doctest::Approx(81.));
    CHECK(a.toolpath.uncovered_area == doctest::Approx(0.).epsilon(1e-9));
    CHECK(a.toolpath.d_path == doctest::Approx(270.));
}

TEST_CASE("grid-aligned rectangle is filled exactly by lines")
{
    const LayerContour r = make_contour(0., {rectangle_ring(1.2, -0.6, 1.2 + 0.3 * 17, -0.6 + 0.3 * 11)});
    for (int layer : {0, 1}) {
        const LayerArea a = layer_area_z(r, no_walls(InfillPattern::Lines0_90), layer);
        CHECK(a.area == doctest::Approx(r.area).epsilon(1e-12));
    }
}

TEST_CASE("concentric circle against the raster oracle")
{
    const PrintConfig cfg;
    const LayerArea   a      = layer_area_z(circle(), cfg, 0);
    const double      raster = raster_of(layer_paths(circle(), cfg, 0), cfg.line_width, 0.01);
    CHECK(a.area == doctest::Approx(raster).epsilon(0.02));
}

TEST_CASE("deposited area never exceeds the contour")
{
    const Ring         L     = {{0, 0}, {10, 0}, {10, 3}, {3, 3}, {3, 10}, {0, 10}};
    const LayerContour shapes[] = {circle(), make_contour(0., {L}),
                                   make_contour(0., {rectangle_ring(0, 0, 10, 10), rectangle_ring(4, 4, 6, 6)}),
                                   make_contour(0., {regular_polygon({3, 1}, 4.1, 7, 0.4)})};
    for (const LayerContour &c : shapes)
        for (InfillPattern p : {InfillPattern::Concentric, InfillPattern::ZigZag, InfillPattern::Lines0_90,
                                InfillPattern::Lines45_neg45})
            for (int layer : {0, 1}) {
                PrintConfig cfg;
                cfg.infill_pattern = p;
                const LayerArea a  = layer_area_z(c, cfg, layer);
                CHECK(a.area <= c.area + 1e-6);
                CHECK(a.toolpath.uncovered_area >= -1e-6);
            }
}

TEST_CASE("raster direction alternates between layers")
{
    const LayerContour sq = make_contour(0., {rectangle_ring(0, 0, 5, 5)});
    auto direction = [&](InfillPattern p, int layer) {
        const InfillPaths ip = infill_paths(sq, p, no_walls(p), layer);
        REQUIRE_FALSE(ip.paths.segments.empty());
        // Longest pass; corner passes are too short for a precise direction.
        const Segment2 &s = *std::max_element(ip.paths.segments.begin(), ip.paths.segments.end(),
                                              [](const Segment2 &a, const Segment2 &b) {
                                                  return norm(a.b - a.a) < norm(b.b - b.a);
                                              });
        const Point2    d = s.b - s.a;
        return (1. / norm(d)) * d;
    };
    CHECK(dot(direction(InfillPattern::Lines0_90, 0), direction(InfillPattern::Lines0_90, 1)) ==
          doctest::Approx(0.).epsilon(1e-12));
    CHECK(dot(direction(InfillPattern::Lines45_neg45, 2), direction(InfillPattern::Lines45_neg45, 3)) ==
          doctest::Approx(0.).epsilon(1e-12));
    CHECK(std::abs(direction(InfillPattern::Lines0_90, 0).x) == doctest::Approx(1.));
    CHECK(std::abs(direction(InfillPattern::Lines45_neg45, 0).x) == doctest::Approx(std::sqrt(0.5)));
}

TEST_CASE("doubling the line width halves the passes")
{
    const LayerContour r = make_contour(0., {rectangle_ring(0, 0, 12, 7.2)});
    PrintConfig        narrow = no_walls(InfillPattern::Lines0_90);
    PrintConfig        wide   = narrow;
    wide.line_width           = 2. * narrow.line_width;
    const InfillPaths  a      = infill_paths(r, InfillPattern::Lines0_90, narrow, 0);
    const InfillPaths  b      = infill_paths(r, InfillPattern::Lines0_90, wide, 0);
    CHECK(std::abs(b.passes - a.passes / 2) <= 1);
    CHECK(std::abs(b.infill_length - 0.5 * a.infill_length) <= 12.);
}

TEST_CASE("zig-zag adds connectors between trimmed passes")
{
    const LayerContour sq   = make_contour(0., {rectangle_ring(0, 0, 9, 9)});
    const PrintConfig  cfg  = no_walls(InfillPattern::ZigZag);
    const InfillPaths  zz   = infill_paths(sq, InfillPattern::ZigZag, cfg, 0);
    const InfillPaths  ln   = infill_paths(sq, InfillPattern::Lines45_neg45, cfg, 0);
    CHECK(zz.raster_angle == doctest::Approx(ln.raster_angle));
    // Each usable pass loses one bead length, each connector adds one.
    CHECK(zz.infill_length < ln.infill_length);
    CHECK(zz.infill_length > ln.infill_length - 0.3 * zz.passes);
}

TEST_CASE("no bead fits a non-empty contour")
{
    CHECK_THROWS_AS(layer_area_z(make_contour(0., {rectangle_ring(0, 0, 0.1, 0.1)}), PrintConfig{}, 0), ZeroArea);
    CHECK(layer_area_z(LayerContour{}, PrintConfig{}, 0).area == 0.);
}
