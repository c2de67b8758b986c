#include "printstiff/geometry.hpp"

#include <doctest.h>

#include <algorithm>

using namespace printstiff;

TEST_CASE("contour area and perimeter of a square")
{
    const LayerContour c = make_contour(0., {rectangle_ring(0, 0, 10, 10)});
    CHECK(contour_area(c) == doctest::Approx(100.));
    CHECK(contour_perimeter(c) == doctest::Approx(40.));
}

TEST_CASE("square with a square hole")
{
    const LayerContour c = make_contour(0., {rectangle_ring(0, 0, 10, 10), rectangle_ring(3, 3, 7, 7)});
    REQUIRE(c.loops.size() == 2);
    CHECK(contour_area(c) == doctest::Approx(84.));
    CHECK(contour_perimeter(c) == doctest::Approx(56.));
    int holes = 0;
    for (const Loop &l : c.loops) {
        if (l.is_hole) {
            ++holes;
            CHECK(signed_area(l.points) < 0.);
            CHECK(l.parent >= 0);
        } else {
            CHECK(signed_area(l.points) > 0.);
        }
    }
    CHECK(holes == 1);
    CHECK_FALSE(contains(c, {5, 5}));
    CHECK(contains(c, {1, 1}));
}

TEST_CASE("empty contour")
{
    const LayerContour c = make_contour(0., {});
    CHECK(c.empty());
    CHECK(contour_area(c) == 0.);
    CHECK(contour_perimeter(c) == 0.);
}

TEST_CASE("orientation is normalized regardless of input winding")
{
    Ring cw = rectangle_ring(0, 0, 2, 3);
    std::reverse(cw.begin(), cw.end());
    const LayerContour c = make_contour(1., {cw});
    REQUIRE(c.loops.size() == 1);
    CHECK(signed_area(c.loops[0].points) == doctest::Approx(6.));
}

TEST_CASE("area is invariant under vertex rotation and translation")
{
    Ring r = regular_polygon({1, 2}, 4., 7, 0.3);
    const double a = contour_area(make_contour(0., {r}));
    for (int k = 1; k < 7; ++k) {
        std::rotate(r.begin(), r.begin() + 1, r.end());
        CHECK(contour_area(make_contour(0., {r})) == doctest::Approx(a).epsilon(1e-14));
    }
    const LayerContour moved = transformed(make_contour(0., {r}), 0., {1000., -250.});
    CHECK(contour_area(moved) == doctest::Approx(a).epsilon(1e-12));
}

TEST_CASE("winding number")
{
    const Ring r = rectangle_ring(0, 0, 1, 1);
    CHECK(winding_number({0.5, 0.5}, r) == 1);
    CHECK(winding_number({1.5, 0.5}, r) == 0);
}
