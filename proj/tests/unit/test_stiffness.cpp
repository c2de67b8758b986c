#include "printstiff/errors.hpp"
#include "printstiff/oracle.hpp"
#include "printstiff/specimen.hpp"
#include "printstiff/stiffness.hpp"

#include <doctest.h>

#include <algorithm>

#include <numbers>
#include <random>

using namespace printstiff;

TEST_CASE("modulus selection")
{
    const FilamentProps petg = petg_preset();
    CHECK(select_modulus(BuildDirection::Z, petg) == 1087.);
    CHECK(select_modulus(BuildDirection::XY, petg) == 1472.);
    CHECK(select_modulus(BuildDirection::Z, petg, true) == 1472.);
    CHECK(select_modulus(BuildDirection::XY, petg, true) == 1087.);
    CHECK(select_modulus_tolerance(BuildDirection::Z, petg) == 79.);
    CHECK(select_modulus_tolerance(BuildDirection::XY, petg) == 270.);
    CHECK(petg.poisson_ratio == 0.38);
    FilamentProps bad = petg;
    bad.e_cross       = 0.;
    CHECK_THROWS_AS(validate(bad), ConfigError);
}

TEST_CASE("compliance examples")
{
    CHECK(compliance_integral(make_profile({2., 2., 2., 2.}, 1., 2.)) == doctest::Approx(2.));
    CHECK(compliance_integral(make_profile(std::vector<double>(40, 2.), 0.1, 2.)) == doctest::Approx(2.));
    CHECK(compliance_integral(make_profile({100., 50.}, 5., 100.)) == doctest::Approx(0.15));
}

TEST_CASE("displacement examples")
{
    const AreaProfile bar = make_profile(std::vector<double>(10, 100.), 1., 100.);
    CHECK(displacement(bar, 1000., 100.) == doctest::Approx(0.01));
    CHECK(displacement(make_profile({100., 50.}, 5., 100.), 1000., 100.) == doctest::Approx(0.015));
    CHECK(displacement(bar, 1000., 200.) == 2. * displacement(bar, 1000., 100.));
}

TEST_CASE("force-displacement curve")
{
    const AreaProfile      bar = make_profile(std::vector<double>(10, 100.), 1., 100.);
    const PredictionResult r   = force_displacement_curve(bar, 1000., LoadCase{{100., 200., 300.}});
    REQUIRE(r.curve.size() == 3);
    for (int k = 0; k < 3; ++k) {
        CHECK(r.curve[k].displacement == doctest::Approx(0.01 * (k + 1)));
        CHECK(r.curve[k].stress == doctest::Approx(1. * (k + 1)));
        CHECK(r.curve[k].strain == doctest::Approx(r.curve[k].displacement / 10.));
    }
    CHECK(r.e_effective == doctest::Approx(1000.));
    CHECK(effective_modulus(r) == doctest::Approx(1000.));
}

TEST_CASE("effective modulus from the area ratio")
{
    const AreaProfile p = make_profile(std::vector<double>(20, 90.), 0.5, 100.);
    CHECK(effective_modulus(p, 1000.) == doctest::Approx(900.));
}

TEST_CASE("strain energy")
{
    const AreaProfile bar = make_profile(std::vector<double>(10, 100.), 1., 100.);
    CHECK(strain_energy(bar, 1000., 100.) == doctest::Approx(0.5));
    CHECK(strain_energy(bar, 1000., 200.) == 4. * strain_energy(bar, 1000., 100.));
    const double h  = 1e-3;
    const double fd = (strain_energy(bar, 1000., 100. + h) - strain_energy(bar, 1000., 100. - h)) / (2. * h);
    CHECK(std::abs(fd - 0.01) <= 1e-8);
}

TEST_CASE("linear load steps")
{
    const LoadCase l = linear_load(600., 10);
    REQUIRE(l.forces.size() == 10);
    CHECK(l.forces.front() == doctest::Approx(60.));
    CHECK(l.forces.back() == doctest::Approx(600.));
    CHECK_THROWS_AS(linear_load(600., 0), ConfigError);
    CHECK_THROWS_AS(linear_load(-1., 3), ConfigError);
    CHECK_THROWS_AS(validate(LoadCase{{100., 50.}}), ConfigError);
    CHECK_THROWS_AS(validate(LoadCase{{}}), ConfigError);
}

TEST_CASE("linearity, monotonicity and the harmonic-mean identity")
{
    std::mt19937                           rng(3);
    std::uniform_real_distribution<double> area(20., 200.), scale(0.1, 10.);
    for (int trial = 0; trial < 50; ++trial) {
        std::vector<double> a(30);
        for (double &v : a)
            v = area(rng);
        const AreaProfile p = make_profile(a, 0.2, 150.);
        const double      F = 321.;
        const double      s = scale(rng);
        CHECK(std::abs(displacement(p, 1100., s * F) - s * displacement(p, 1100., F)) <=
              1e-12 * s * displacement(p, 1100., F));

        double inv = 0.;
        for (double v : a)
            inv += 1. / v;
        const double hmean = double(a.size()) / inv;
        CHECK(effective_modulus(p, 1100.) == doctest::Approx(1100. * hmean / 150.).epsilon(1e-12));
        CHECK(hmean >= *std::min_element(a.begin(), a.end()));
        CHECK(hmean <= *std::max_element(a.begin(), a.end()));

        std::vector<double> b = a;
        b[trial % b.size()] *= 0.9;
        const AreaProfile q = make_profile(b, 0.2, 150.);
        CHECK(compliance_integral(q) > compliance_integral(p));
        CHECK(effective_modulus(q, 1100.) < effective_modulus(p, 1100.));
    }
}

TEST_CASE("effective modulus does not depend on the load case")
{
    const AreaProfile p = make_profile({80., 95., 70., 99.}, 0.3, 100.);
    const double a = force_displacement_curve(p, 1000., linear_load(600., 10)).e_effective;
    const double b = force_displacement_curve(p, 1000., LoadCase{{1., 7., 1234.5}}).e_effective;
    CHECK(a == doctest::Approx(b).epsilon(1e-14));
}

TEST_CASE("linear taper converges at second order")
{
    double prev_err = 0.;
    for (int n : {10, 20, 40, 80}) {
        std::vector<double> a;
        const double        t = 10. / n;
        for (int i = 0; i < n; ++i)
            a.push_back(10. * (1. + (i + 0.5) * t / 10.));
        const double err = std::abs(displacement(make_profile(a, t, 10.), 1000., 100.) -
                                    oracle::closed_form_taper(100., 10., 1000., 10.));
        if (prev_err > 0.)
            CHECK(prev_err / err >= 3.5);
        prev_err = err;
    }
}

TEST_CASE("cylinder profile")
{
    PrintConfig       cfg;
    const AreaProfile p = area_profile(specimen_cylinder(), cfg);
    REQUIRE(p.entries.size() == 338);
    CHECK(p.length == doctest::Approx(338 * 0.15));
    CHECK(p.nominal_area == doctest::Approx(std::numbers::pi * 12.7 * 12.7).epsilon(1e-3));
    for (const AreaEntry &e : p.entries) {
        CHECK(e.area == doctest::Approx(p.entries.front().area).epsilon(1e-9));
        CHECK(e.area < std::numbers::pi * 12.7 * 12.7);
    }
}

TEST_CASE("cube profile with lines and no walls")
{
    PrintConfig cfg;
    cfg.wall_line_count = 0;
    cfg.infill_pattern  = InfillPattern::Lines0_90;
    const AreaProfile p = area_profile(make_box({0, 0, 0}, {9, 9, 9}), cfg);
    REQUIRE(p.entries.size() == 60);
    for (const AreaEntry &e : p.entries)
        CHECK(e.area == doctest::Approx(81.));
}

TEST_CASE("layer without material")
{
    // A thin fin on top of a block: the fin is narrower than one bead.
    const TriangleMesh block = make_box({0, 0, 0}, {5, 5, 2});
    const TriangleMesh fin   = make_box({0, 0, 2}, {5, 0.1, 3});
    std::vector<Point3>              v = block.vertices();
    std::vector<std::array<int, 3>> t = block.triangles();
    const int                        off = int(v.size());
    for (const Point3 &p : fin.vertices())
        v.push_back(p);
    for (auto tri : fin.triangles())
        t.push_back({tri[0] + off, tri[1] + off, tri[2] + off});
    const TriangleMesh part(v, t);

    PrintConfig cfg;
    CHECK_THROWS_AS(area_profile(part, cfg), ZeroAreaLayer);
    try {
        area_profile(part, cfg);
    } catch (const ZeroAreaLayer &e) {
        CHECK(e.layer() == 13);
    }
    ProfileOptions opt;
    opt.skip_zero_layers = true;
    const AreaProfile p  = area_profile(part, cfg, opt);
    CHECK(p.skipped_layers.size() == 7);
    for (const AreaEntry &e : p.entries)
        CHECK(e.area > 0.);
}

TEST_CASE("parallel profile equals serial profile")
{
    PrintConfig cfg;
    cfg.infill_pattern = InfillPattern::Lines45_neg45;
    const TriangleMesh sphere = make_sphere(8., {0, 0, 8}, 64, 80);
    ProfileOptions     par;
    par.threads         = 4;
    const AreaProfile a = area_profile(sphere, cfg);
    const AreaProfile b = area_profile(sphere, cfg, par);
    REQUIRE(a.entries.size() == b.entries.size());
    for (size_t i = 0; i < a.entries.size(); ++i)
        CHECK(a.entries[i].area == b.entries[i].area);
}
