#pragma once

#include "printstiff/geometry.hpp"

#include <array>
#include <filesystem>
#include <iosfwd>
#include <string_view>
#include <vector>

namespace printstiff {

struct BoundingBox3
{
    Point3 min;
    Point3 max;
};

// Indexed triangle mesh of the part solid, coordinates in mm.
class TriangleMesh
{
public:
    TriangleMesh() = default;
    // Validates the invariants; throws EmptyMesh or NonFinite.
    TriangleMesh(std::vector<Point3> vertices, std::vector<std::array<int, 3>> triangles);

    const std::vector<Point3>              &vertices() const { return m_vertices; }
    const std::vector<std::array<int, 3>> &triangles() const { return m_triangles; }
    const BoundingBox3                     &bounds() const { return m_bounds; }
    double                                  height() const { return m_bounds.max.z - m_bounds.min.z; }

    // Every undirected edge is shared by exactly two triangles.
    bool is_manifold() const;
    // Signed volume by the divergence theorem; positive for outward normals.
    double volume() const;

private:
    std::vector<Point3>              m_vertices;
    std::vector<std::array<int, 3>> m_triangles;
    BoundingBox3                     m_bounds;
};

enum class StlFormat { Auto, Ascii, Binary };

// Triangle soups are welded on bitwise-identical vertex coordinates.
TriangleMesh load_mesh(std::istream &in, StlFormat format = StlFormat::Auto);
TriangleMesh load_mesh(const std::filesystem::path &path, StlFormat format = StlFormat::Auto);
TriangleMesh mesh_from_bytes(std::string_view bytes, StlFormat format = StlFormat::Auto);

void write_stl_binary(const TriangleMesh &mesh, std::ostream &out);
void write_stl_ascii(const TriangleMesh &mesh, std::ostream &out);

} // namespace printstiff
