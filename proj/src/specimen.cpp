#include "printstiff/specimen.hpp"

#include "printstiff/errors.hpp"

#include <numbers>

namespace printstiff {

namespace {

Ring ccw(Ring ring)
{
    if (signed_area(ring) < 0.)
        std::reverse(ring.begin(), ring.end());
    return ring;
}

} // namespace

TriangleMesh make_box(Point3 min, Point3 max)
{
    return make_prism(rectangle_ring(min.x, min.y, max.x, max.y), min.z, max.z - min.z);
}

TriangleMesh make_prism(const Ring &ring_in, double z0, double height)
{
    const Ring ring = ccw(ring_in);
    const int  n    = int(ring.size());
    if (n < 3 || height <= 0.)
        throw ConfigError("prism needs at least 3 vertices and a positive height");
    Point2 c{};
    for (const Point2 &p : ring)
        c = c + p;
    c = (1. / n) * c;

    std::vector<Point3> v;
    for (const Point2 &p : ring)
        v.push_back({p.x, p.y, z0});
    for (const Point2 &p : ring)
        v.push_back({p.x, p.y, z0 + height});
    const int cb = int(v.size());
    v.push_back({c.x, c.y, z0});
    v.push_back({c.x, c.y, z0 + height});
    const int ct = cb + 1;

    std::vector<std::array<int, 3>> t;
    for (int i = 0; i < n; ++i) {
        const int j = (i + 1) % n;
        t.push_back({cb, j, i});
        t.push_back({ct, n + i, n + j});
        t.push_back({i, j, n + j});
        t.push_back({i, n + j, n + i});
    }
    return TriangleMesh(std::move(v), std::move(t));
}

TriangleMesh make_tube(const Ring &outer_in, const Ring &inner_in, double z0, double height)
{
    const Ring outer = ccw(outer_in);
    const Ring inner = ccw(inner_in);
    const int  n     = int(outer.size());
    if (n < 3 || int(inner.size()) != n || height <= 0.)
        throw ConfigError("tube needs matching rings of at least 3 vertices and a positive height");

    // Layout: outer bottom, outer top, inner bottom, inner top.
    std::vector<Point3> v;
    for (const Ring *r : {&outer, &inner})
        for (double z : {z0, z0 + height})
            for (const Point2 &p : *r)
                v.push_back({p.x, p.y, z});
    const int ob = 0, ot = n, ib = 2 * n, it = 3 * n;

    std::vector<std::array<int, 3>> t;
    for (int i = 0; i < n; ++i) {
        const int j = (i + 1) % n;
        t.push_back({ob + i, ob + j, ot + j});
        t.push_back({ob + i, ot + j, ot + i});
        t.push_back({ib + i, it + j, ib + j});
        t.push_back({ib + i, it + i, it + j});
        t.push_back({ot + i, ot + j, it + j});
        t.push_back({ot + i, it + j, it + i});
        t.push_back({ob + i, ib + j, ob + j});
        t.push_back({ob + i, ib + i, ib + j});
    }
    return TriangleMesh(std::move(v), std::move(t));
}

TriangleMesh make_cylinder(double radius, double height, int segments)
{
    return make_prism(regular_polygon({0., 0.}, radius, segments), 0., height);
}

TriangleMesh make_sphere(double radius, Point3 center, int slices, int stacks)
{
    if (slices < 3 || stacks < 2 || radius <= 0.)
        throw ConfigError("sphere needs slices >= 3, stacks >= 2 and a positive radius");
    std::vector<Point3> v;
    v.push_back({center.x, center.y, center.z - radius});
    for (int k = 1; k < stacks; ++k) {
        const double theta = std::numbers::pi * k / stacks;
        const double z     = center.z - radius * std::cos(theta);
        const double r     = radius * std::sin(theta);
        for (int i = 0; i < slices; ++i) {
            const double a = 2. * std::numbers::pi * i / slices;
            v.push_back({center.x + r * std::cos(a), center.y + r * std::sin(a), z});
        }
    }
    v.push_back({center.x, center.y, center.z + radius});
    const int top  = int(v.size()) - 1;
    auto      ring = [&](int k, int i) { return 1 + (k - 1) * slices + (i % slices); };

    std::vector<std::array<int, 3>> t;
    for (int i = 0; i < slices; ++i) {
        t.push_back({0, ring(1, i + 1), ring(1, i)});
        t.push_back({top, ring(stacks - 1, i), ring(stacks - 1, i + 1)});
        for (int k = 1; k + 1 < stacks; ++k) {
            t.push_back({ring(k, i), ring(k, i + 1), ring(k + 1, i + 1)});
            t.push_back({ring(k, i), ring(k + 1, i + 1), ring(k + 1, i)});
        }
    }
    return TriangleMesh(std::move(v), std::move(t));
}

TriangleMesh specimen_cylinder(int segments)
{
    return make_cylinder(kSpecimenRadius, kSpecimenHeight, segments);
}

} // namespace printstiff
