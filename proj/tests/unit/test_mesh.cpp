#include "printstiff/errors.hpp"
#include "printstiff/mesh.hpp"
#include "printstiff/specimen.hpp"

#include <doctest.h>

#include <cstdint>
#include <limits>

#include <cstring>
#include <sstream>

using namespace printstiff;

namespace {

std::string cube_ascii()
{
    std::ostringstream s;
    write_stl_ascii(make_box({0, 0, 0}, {10, 10, 10}), s);
    return s.str();
}

std::string binary_header(uint32_t count)
{
    std::string b(80, ' ');
    b.append(reinterpret_cast<const char *>(&count), 4);
    return b;
}

} // namespace

TEST_CASE("ascii cube round trip")
{
    const TriangleMesh m = mesh_from_bytes(cube_ascii());
    // Caps are fanned from the centroid: 4 + 4 + 8 side triangles.
    CHECK(m.triangles().size() == 16);
    CHECK(m.bounds().min.x == 0.);
    CHECK(m.bounds().max.z == 10.);
    CHECK(m.is_manifold());
    CHECK(m.volume() == doctest::Approx(1000.));
}

TEST_CASE("binary round trip")
{
    const TriangleMesh src = make_cylinder(3., 5., 32);
    std::ostringstream out;
    write_stl_binary(src, out);
    const TriangleMesh m = mesh_from_bytes(out.str());
    CHECK(m.triangles().size() == src.triangles().size());
    CHECK(m.is_manifold());
    CHECK(m.volume() == doctest::Approx(src.volume()));
}

TEST_CASE("binary file declaring zero triangles")
{
    CHECK_THROWS_AS(mesh_from_bytes(binary_header(0), StlFormat::Binary), EmptyMesh);
    CHECK_THROWS_AS(mesh_from_bytes(binary_header(0)), EmptyMesh);
}

TEST_CASE("file shorter than the binary header")
{
    CHECK_THROWS_AS(mesh_from_bytes(std::string(40, '\0')), MalformedFile);
}

TEST_CASE("truncated binary body")
{
    std::string b = binary_header(3);
    b.append(50, '\0');
    CHECK_THROWS_AS(mesh_from_bytes(b, StlFormat::Binary), MalformedFile);
}

TEST_CASE("non-finite ascii coordinate")
{
    std::string s = cube_ascii();
    const size_t pos = s.find("vertex ");
    REQUIRE(pos != std::string::npos);
    s.replace(pos + 7, 1, "nan ");
    CHECK_THROWS_AS(mesh_from_bytes(s), NonFinite);
}

TEST_CASE("direct construction validates invariants")
{
    CHECK_THROWS_AS(TriangleMesh({}, {}), EmptyMesh);
    CHECK_THROWS_AS(TriangleMesh({{0, 0, 0}, {1, 0, 0}, {0, 1, std::numeric_limits<double>::infinity()}}, {{0, 1, 2}}),
                    NonFinite);
}

TEST_CASE("open surface is not manifold")
{
    const TriangleMesh m({{0, 0, 0}, {1, 0, 0}, {0, 1, 0}}, {{0, 1, 2}});
    CHECK_FALSE(m.is_manifold());
}

TEST_CASE("specimen cylinder dimensions")
{
    const TriangleMesh m = specimen_cylinder();
    CHECK(m.height() == doctest::Approx(50.8));
    CHECK(m.bounds().max.x == doctest::Approx(12.7));
    CHECK(m.is_manifold());
}
