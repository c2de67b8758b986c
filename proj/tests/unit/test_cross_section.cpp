#include "printstiff/cross_section.hpp"
#include "printstiff/errors.hpp"
#include "printstiff/oracle.hpp"

#include <doctest.h>

#include <numbers>

using namespace printstiff;

TEST_CASE("filament section areas")
{
    PrintConfig cfg;
    const double expect = std::numbers::pi * 0.075 * 0.075 + 0.0225;
    CHECK(filament_section_area(cfg, SectionModel::DiscSquare) == doctest::Approx(expect).epsilon(1e-14));
    CHECK(filament_section_area(cfg, SectionModel::DiscSquare) == doctest::Approx(0.040171).epsilon(1e-5));
    // Equal when the line width is twice the layer thickness.
    CHECK(filament_section_area(cfg, SectionModel::Stadium) == doctest::Approx(expect).epsilon(1e-14));
    cfg.line_width = 0.4;
    CHECK(filament_section_area(cfg, SectionModel::Stadium) ==
          doctest::Approx(0.25 * 0.15 + std::numbers::pi * 0.075 * 0.075));
    cfg.layer_thickness = 0.;
    CHECK_THROWS_AS(filament_section_area(cfg, SectionModel::DiscSquare), DegenerateFilament);
    CHECK_THROWS_AS(filament_section_area(cfg, SectionModel::Stadium), DegenerateFilament);
}

TEST_CASE("rectangle lattice count")
{
    const LayerContour r = make_contour(0., {rectangle_ring(0, 0, 3.0, 0.6)});
    const FilamentGrid g = count_filament_sections(r, PrintConfig{});
    CHECK(g.n_cross == 40);
    CHECK(g.spacing_h == 0.3);
    CHECK(g.spacing_v == 0.15);
    CHECK(g.phase.x == doctest::Approx(0.15));
    CHECK(g.phase.y == doctest::Approx(0.075));
    CHECK(oracle::grid_count_oracle(r, 0.3, 0.15, g.phase) == 40);
    // Every stadium fits, so footprint membership agrees here.
    CHECK(count_filament_sections(r, PrintConfig{}, Membership::Footprint).n_cross == 40);
}

TEST_CASE("empty contour counts nothing and has no area")
{
    CHECK(count_filament_sections(LayerContour{}, PrintConfig{}).n_cross == 0);
    CHECK_THROWS_AS(layer_area_xy(LayerContour{}, PrintConfig{}, SectionModel::DiscSquare), ZeroArea);
}

TEST_CASE("layer area of the rectangle")
{
    const LayerContour     r = make_contour(0., {rectangle_ring(0, 0, 3.0, 0.6)});
    const LayerSectionArea a = layer_area_xy(r, PrintConfig{}, SectionModel::DiscSquare);
    CHECK(a.area == doctest::Approx(40. * 0.0401714).epsilon(1e-5));
    CHECK(a.area == doctest::Approx(1.6069).epsilon(1e-4));
    CHECK(a.area / r.area == doctest::Approx(0.893).epsilon(1e-3));
}

TEST_CASE("circle count near the area ratio")
{
    const LayerContour c = make_contour(0., {regular_polygon({0, 0}, 12.7, 256)});
    const FilamentGrid g = count_filament_sections(c, PrintConfig{});
    CHECK(double(g.n_cross) == doctest::Approx(11261.).epsilon(0.01));
    CHECK(g.n_cross == oracle::grid_count_oracle(c, 0.3, 0.15, g.phase));
    const FilamentGrid f = count_filament_sections(c, PrintConfig{}, Membership::Footprint);
    CHECK(f.n_cross < g.n_cross);
}

TEST_CASE("boundary band bound")
{
    const LayerContour shapes[] = {make_contour(0., {rectangle_ring(0, 0, 7.3, 4.1)}),
                                   make_contour(0., {regular_polygon({0, 0}, 6., 96)}),
                                   make_contour(0., {regular_polygon({1, 2}, 3., 5, 0.2)})};
    for (const LayerContour &c : shapes) {
        for (Membership m : {Membership::Center, Membership::Footprint}) {
            const long n = count_filament_sections(c, PrintConfig{}, m).n_cross;
            CHECK(std::abs(double(n) * 0.3 * 0.15 - c.area) <= c.perimeter * 0.3);
        }
    }
}

TEST_CASE("section area stays below the contour")
{
    const LayerContour shapes[] = {make_contour(0., {regular_polygon({0, 0}, 12.7, 256)}),
                                   make_contour(0., {rectangle_ring(0, 0, 3.0, 0.6)}),
                                   make_contour(0., {regular_polygon({0, 0}, 2., 6)})};
    for (const LayerContour &c : shapes)
        for (SectionModel k : {SectionModel::DiscSquare, SectionModel::Stadium})
            CHECK(layer_area_xy(c, PrintConfig{}, k).area <= c.area + 1e-6);
}

TEST_CASE("translation of grid-aligned rectangles")
{
    const LayerContour base = make_contour(0., {rectangle_ring(0, 0, 4.5, 1.5)});
    const long         n    = count_filament_sections(base, PrintConfig{}).n_cross;
    CHECK(n == 150);
    for (Point2 shift : {Point2{0.3, 0.15}, Point2{-12.3, 7.05}, Point2{0.123, 0.0456}})
        CHECK(count_filament_sections(transformed(base, 0., shift), PrintConfig{}).n_cross == n);
}

TEST_CASE("translation invariance up to the boundary band")
{
    const LayerContour base = make_contour(0., {regular_polygon({0, 0}, 5., 40)});
    const long         n    = count_filament_sections(base, PrintConfig{}).n_cross;
    for (Point2 shift : {Point2{0.07, 0.03}, Point2{3.11, -2.9}}) {
        const long m = count_filament_sections(transformed(base, 0., shift), PrintConfig{}).n_cross;
        CHECK(std::abs(m - n) <= base.perimeter / 0.3 + base.perimeter / 0.15);
    }
}

TEST_CASE("holes are excluded")
{
    const LayerContour c = make_contour(0., {rectangle_ring(0, 0, 6, 3), rectangle_ring(1.5, 0.75, 4.5, 2.25)});
    const FilamentGrid g = count_filament_sections(c, PrintConfig{});
    CHECK(g.n_cross == 20 * 20 - 10 * 10);
    CHECK(g.n_cross == oracle::grid_count_oracle(c, 0.3, 0.15, g.phase));
}
