#include "printstiff/oracle.hpp"

#include <doctest.h>

#include <numbers>
#include <sstream>

using namespace printstiff;
using namespace printstiff::oracle;

TEST_CASE("single stroke is a stadium")
{
    const double a = raster_area({}, {{{0, 0}, {10, 0}}}, 0.3, 0.01);
    CHECK(a == doctest::Approx(3. + std::numbers::pi * 0.15 * 0.15).epsilon(0.01));
}

TEST_CASE("coincident strokes count once")
{
    const Stroke s{{1, 1}, {4, 3}};
    CHECK(raster_area({}, {s, s}, 0.3, 0.01) == raster_area({}, {s}, 0.3, 0.01));
}

TEST_CASE("empty path set")
{
    CHECK(raster_area({}, {}, 0.3, 0.01) == 0.);
}

TEST_CASE("closed ring is stamped along its edges")
{
    const double a = raster_area({rectangle_ring(0, 0, 10, 10)}, {}, 0.3, 0.01);
    CHECK(a == doctest::Approx(40. * 0.3 + std::numbers::pi * 0.15 * 0.15).epsilon(0.01));
}

TEST_CASE("halving the cell barely changes the area")
{
    const std::vector<Stroke> strokes = {{{0, 0}, {5, 2}}, {{0, 1}, {5, 1}}, {{2, -1}, {2, 4}}};
    const double              coarse  = raster_area({}, strokes, 0.3, 0.02);
    const double              fine    = raster_area({}, strokes, 0.3, 0.01);
    CHECK(std::abs(coarse - fine) / fine < 0.005);
}

TEST_CASE("lattice enumeration")
{
    const LayerContour r = make_contour(0., {rectangle_ring(0, 0, 3, 0.6)});
    CHECK(grid_count_oracle(r, 0.3, 0.15, {0.15, 0.075}) == 40);
    CHECK(grid_count_oracle(LayerContour{}, 0.3, 0.15, {}) == 0);

    const LayerContour axis = make_contour(0., {rectangle_ring(-5, -5, 5, 5)});
    const LayerContour rot  = transformed(axis, std::numbers::pi / 4.);
    const long         na   = grid_count_oracle(axis, 0.3, 0.15, {-4.85, -4.925});
    const BoundingBox2 bb   = bounding_box(rot);
    const long         nr   = grid_count_oracle(rot, 0.3, 0.15, bb.min + Point2{0.15, 0.075});
    CHECK(std::abs(nr - na) <= rot.perimeter / 0.3 + rot.perimeter / 0.15);
}

TEST_CASE("closed-form bars")
{
    CHECK(closed_form_bar(100., 10., 1000., 100.) == doctest::Approx(0.01));
    CHECK(closed_form_taper(100., 10., 1000., 10.) == doctest::Approx(0.0693147).epsilon(1e-6));
    CHECK(closed_form_bar(0., 10., 1000., 100.) == 0.);
    CHECK(closed_form_taper(0., 10., 1000., 10.) == 0.);
}

TEST_CASE("pbm dump")
{
    const RasterGrid   g = rasterize({}, {{{0, 0}, {1, 0}}}, 0.3, 0.1);
    std::ostringstream s;
    write_pbm(g, s);
    CHECK(s.str().rfind("P1\n", 0) == 0);
    CHECK(g.measured_area() == doctest::Approx(double(g.occupied_cells()) * 0.01));
}
