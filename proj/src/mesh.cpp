#include "printstiff/mesh.hpp"

#include "printstiff/errors.hpp"

#include <bit>
#include <cmath>
#include <cstdint>
#include <cstring>
#include <fstream>
#include <iterator>
#include <map>
#include <sstream>
#include <tuple>

namespace printstiff {

TriangleMesh::TriangleMesh(std::vector<Point3> vertices, std::vector<std::array<int, 3>> triangles)
    : m_vertices(std::move(vertices)), m_triangles(std::move(triangles))
{
    if (m_triangles.empty())
        throw EmptyMesh("mesh has no triangles");
    const double inf = std::numeric_limits<double>::infinity();
    m_bounds         = {{inf, inf, inf}, {-inf, -inf, -inf}};
    for (const Point3 &v : m_vertices) {
        if (!std::isfinite(v.x) || !std::isfinite(v.y) || !std::isfinite(v.z))
            throw NonFinite("non-finite vertex coordinate");
        m_bounds.min = {std::min(m_bounds.min.x, v.x), std::min(m_bounds.min.y, v.y), std::min(m_bounds.min.z, v.z)};
        m_bounds.max = {std::max(m_bounds.max.x, v.x), std::max(m_bounds.max.y, v.y), std::max(m_bounds.max.z, v.z)};
    }
    for (const auto &t : m_triangles)
        for (int v : t)
            if (v < 0 || size_t(v) >= m_vertices.size())
                throw MalformedFile("triangle references vertex " + std::to_string(v) + " out of range");
}

bool TriangleMesh::is_manifold() const
{
    std::map<std::pair<int, int>, int> edges;
    for (const auto &t : m_triangles)
        for (int k = 0; k < 3; ++k) {
            const int a = t[k], b = t[(k + 1) % 3];
            ++edges[{std::min(a, b), std::max(a, b)}];
        }
    for (const auto &[edge, count] : edges)
        if (count != 2)
            return false;
    return true;
}

double TriangleMesh::volume() const
{
    double v = 0.;
    for (const auto &t : m_triangles) {
        const Point3 &a = m_vertices[t[0]], &b = m_vertices[t[1]], &c = m_vertices[t[2]];
        v += a.x * (b.y * c.z - b.z * c.y) - a.y * (b.x * c.z - b.z * c.x) + a.z * (b.x * c.y - b.y * c.x);
    }
    return v / 6.;
}

namespace {

class Welder
{
public:
    int index(const Point3 &p)
    {
        auto [it, inserted] = m_index.try_emplace(std::make_tuple(p.x, p.y, p.z), int(m_vertices.size()));
        if (inserted)
            m_vertices.push_back(p);
        return it->second;
    }

    TriangleMesh finish(std::vector<std::array<int, 3>> triangles) { return TriangleMesh(std::move(m_vertices), std::move(triangles)); }

private:
    std::map<std::tuple<double, double, double>, int> m_index;
    std::vector<Point3>                               m_vertices;
};

void check_finite(const Point3 &p)
{
    if (!std::isfinite(p.x) || !std::isfinite(p.y) || !std::isfinite(p.z))
        throw NonFinite("non-finite vertex coordinate in STL");
}

float read_f32(const char *p)
{
    uint32_t u;
    std::memcpy(&u, p, 4);
    if constexpr (std::endian::native == std::endian::big)
        u = __builtin_bswap32(u);
    return std::bit_cast<float>(u);
}

uint32_t read_u32(const char *p)
{
    uint32_t u;
    std::memcpy(&u, p, 4);
    if constexpr (std::endian::native == std::endian::big)
        u = __builtin_bswap32(u);
    return u;
}

TriangleMesh parse_binary(std::string_view bytes)
{
    if (bytes.size() < 84)
        throw MalformedFile("binary STL shorter than its 84-byte header");
    const uint32_t count = read_u32(bytes.data() + 80);
    if (count == 0)
        throw EmptyMesh("binary STL declares 0 triangles");
    if (bytes.size() < 84 + uint64_t(count) * 50)
        throw MalformedFile("binary STL truncated: declares " + std::to_string(count) + " facets");
    Welder                           welder;
    std::vector<std::array<int, 3>> tris;
    tris.reserve(count);
    for (uint32_t f = 0; f < count; ++f) {
        const char         *rec = bytes.data() + 84 + size_t(f) * 50 + 12;
        std::array<int, 3> tri{};
        for (int k = 0; k < 3; ++k) {
            const Point3 p{read_f32(rec + 12 * k), read_f32(rec + 12 * k + 4), read_f32(rec + 12 * k + 8)};
            check_finite(p);
            tri[k] = welder.index(p);
        }
        tris.push_back(tri);
    }
    return welder.finish(std::move(tris));
}

TriangleMesh parse_ascii(std::string_view bytes)
{
    std::istringstream in{std::string(bytes)};
    std::string        tok;
    if (!(in >> tok) || tok != "solid")
        throw MalformedFile("ASCII STL must start with 'solid'");
    Welder                           welder;
    std::vector<std::array<int, 3>> tris;
    std::array<int, 3>               tri{};
    int                              corner = 0;
    auto number = [&]() {
        std::string t;
        if (!(in >> t))
            throw MalformedFile("ASCII STL truncated inside a vertex");
        char        *end = nullptr;
        const double v   = std::strtod(t.c_str(), &end);
        if (end == t.c_str() || *end != '\0')
            throw MalformedFile("ASCII STL: '" + t + "' is not a number");
        return v;
    };
    while (in >> tok) {
        if (tok == "vertex") {
            const Point3 p{number(), number(), number()};
            check_finite(p);
            tri[corner++] = welder.index(p);
            if (corner == 3) {
                tris.push_back(tri);
                corner = 0;
            }
        } else if (tok == "endloop" && corner != 0) {
            throw MalformedFile("ASCII STL facet without exactly three vertices");
        }
    }
    if (corner != 0)
        throw MalformedFile("ASCII STL truncated inside a facet");
    if (tris.empty())
        throw EmptyMesh("ASCII STL contains no facets");
    return welder.finish(std::move(tris));
}

bool looks_binary(std::string_view bytes)
{
    if (bytes.size() < 84)
        return false;
    return 84 + uint64_t(read_u32(bytes.data() + 80)) * 50 == bytes.size();
}

} // namespace

TriangleMesh mesh_from_bytes(std::string_view bytes, StlFormat format)
{
    switch (format) {
    case StlFormat::Binary: return parse_binary(bytes);
    case StlFormat::Ascii: return parse_ascii(bytes);
    case StlFormat::Auto: break;
    }
    if (looks_binary(bytes))
        return parse_binary(bytes);
    if (bytes.substr(0, 5) == "solid")
        return parse_ascii(bytes);
    return parse_binary(bytes);
}

TriangleMesh load_mesh(std::istream &in, StlFormat format)
{
    const std::string bytes{std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
    return mesh_from_bytes(bytes, format);
}

TriangleMesh load_mesh(const std::filesystem::path &path, StlFormat format)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw MalformedFile("cannot open mesh file " + path.string());
    return load_mesh(in, format);
}

namespace {

Point3 facet_normal(const Point3 &a, const Point3 &b, const Point3 &c)
{
    const Point3 u{b.x - a.x, b.y - a.y, b.z - a.z};
    const Point3 v{c.x - a.x, c.y - a.y, c.z - a.z};
    Point3       n{u.y * v.z - u.z * v.y, u.z * v.x - u.x * v.z, u.x * v.y - u.y * v.x};
    const double l = std::sqrt(n.x * n.x + n.y * n.y + n.z * n.z);
    if (l > 0.)
        n = {n.x / l, n.y / l, n.z / l};
    return n;
}

void put_f32(std::ostream &out, double v)
{
    uint32_t u = std::bit_cast<uint32_t>(float(v));
    if constexpr (std::endian::native == std::endian::big)
        u = __builtin_bswap32(u);
    out.write(reinterpret_cast<const char *>(&u), 4);
}

} // namespace

void write_stl_binary(const TriangleMesh &mesh, std::ostream &out)
{
    char header[80] = "printstiff binary STL";
    out.write(header, 80);
    uint32_t n = uint32_t(mesh.triangles().size());
    if constexpr (std::endian::native == std::endian::big)
        n = __builtin_bswap32(n);
    out.write(reinterpret_cast<const char *>(&n), 4);
    const auto &v = mesh.vertices();
    for (const auto &t : mesh.triangles()) {
        const Point3 nrm = facet_normal(v[t[0]], v[t[1]], v[t[2]]);
        put_f32(out, nrm.x);
        put_f32(out, nrm.y);
        put_f32(out, nrm.z);
        for (int k = 0; k < 3; ++k) {
            put_f32(out, v[t[k]].x);
            put_f32(out, v[t[k]].y);
            put_f32(out, v[t[k]].z);
        }
        const uint16_t attr = 0;
        out.write(reinterpret_cast<const char *>(&attr), 2);
    }
}

void write_stl_ascii(const TriangleMesh &mesh, std::ostream &out)
{
    const auto &v = mesh.vertices();
    out.precision(17);
    out << "solid printstiff\n";
    for (const auto &t : mesh.triangles()) {
        const Point3 nrm = facet_normal(v[t[0]], v[t[1]], v[t[2]]);
        out << "  facet normal " << nrm.x << ' ' << nrm.y << ' ' << nrm.z << "\n    outer loop\n";
        for (int k = 0; k < 3; ++k)
            out << "      vertex " << v[t[k]].x << ' ' << v[t[k]].y << ' ' << v[t[k]].z << '\n';
        out << "    endloop\n  endfacet\n";
    }
    out << "endsolid printstiff\n";
}

} // namespace printstiff
