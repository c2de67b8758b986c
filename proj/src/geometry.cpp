#include "printstiff/geometry.hpp"

#include <algorithm>
#include <numbers>

namespace printstiff {

double signed_area(std::span<const Point2> ring)
{
    const size_t n = ring.size();
    if (n < 3)
        return 0.;
    // Shift to the first vertex to keep the shoelace sum well conditioned far
    // from the origin.
    const Point2 o   = ring[0];
    double       acc = 0.;
    for (size_t i = 1; i + 1 < n; ++i)
        acc += cross(ring[i] - o, ring[i + 1] - o);
    return 0.5 * acc;
}

double ring_length(std::span<const Point2> ring)
{
    const size_t n = ring.size();
    if (n < 2)
        return 0.;
    double len = 0.;
    for (size_t i = 0; i < n; ++i)
        len += norm(ring[(i + 1) % n] - ring[i]);
    return len;
}

int winding_number(Point2 p, std::span<const Point2> ring)
{
    const size_t n  = ring.size();
    int          wn = 0;
    for (size_t i = 0; i < n; ++i) {
        const Point2 &a = ring[i];
        const Point2 &b = ring[(i + 1) % n];
        if (a.y <= p.y) {
            if (b.y > p.y && cross(b - a, p - a) > 0.)
                ++wn;
        } else if (b.y <= p.y && cross(b - a, p - a) < 0.) {
            --wn;
        }
    }
    return wn;
}

double contour_area(const LayerContour &contour)
{
    double area = 0.;
    for (const Loop &loop : contour.loops) {
        const double a = std::abs(signed_area(loop.points));
        area += loop.is_hole ? -a : a;
    }
    return area;
}

double contour_perimeter(const LayerContour &contour)
{
    double len = 0.;
    for (const Loop &loop : contour.loops)
        len += ring_length(loop.points);
    return len;
}

bool contains(const LayerContour &contour, Point2 p)
{
    int wn = 0;
    for (const Loop &loop : contour.loops)
        wn += winding_number(p, loop.points);
    return wn > 0;
}

BoundingBox2 bounding_box(const LayerContour &contour)
{
    BoundingBox2 bb;
    for (const Loop &loop : contour.loops)
        for (const Point2 &p : loop.points)
            bb.merge(p);
    return bb;
}

namespace {

Ring cleaned(Ring ring)
{
    Ring out;
    out.reserve(ring.size());
    for (const Point2 &p : ring)
        if (out.empty() || norm(p - out.back()) > 1e-12)
            out.push_back(p);
    while (out.size() > 1 && norm(out.front() - out.back()) <= 1e-12)
        out.pop_back();
    return out;
}

} // namespace

LayerContour make_contour(double z, std::vector<Ring> rings)
{
    std::vector<Ring> kept;
    kept.reserve(rings.size());
    for (Ring &r : rings) {
        Ring c = cleaned(std::move(r));
        if (c.size() >= 3 && std::abs(signed_area(c)) > 1e-12)
            kept.push_back(std::move(c));
    }

    const size_t     n = kept.size();
    std::vector<int> depth(n, 0);
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j)
            if (i != j && winding_number(kept[i].front(), kept[j]) != 0)
                ++depth[i];

    LayerContour contour;
    contour.z = z;
    contour.loops.reserve(n);
    for (size_t i = 0; i < n; ++i) {
        Loop loop;
        loop.points        = std::move(kept[i]);
        loop.is_hole       = depth[i] % 2 == 1;
        const bool ccw     = signed_area(loop.points) > 0.;
        if (ccw == loop.is_hole)
            std::reverse(loop.points.begin(), loop.points.end());
        contour.loops.push_back(std::move(loop));
    }
    for (size_t i = 0; i < n; ++i) {
        if (!contour.loops[i].is_hole)
            continue;
        for (size_t j = 0; j < n; ++j)
            if (j != i && depth[j] == depth[i] - 1 &&
                winding_number(contour.loops[i].points.front(), contour.loops[j].points) != 0) {
                contour.loops[i].parent = int(j);
                break;
            }
    }
    contour.area      = contour_area(contour);
    contour.perimeter = contour_perimeter(contour);
    return contour;
}

LayerContour transformed(const LayerContour &contour, double angle, Point2 shift)
{
    LayerContour out = contour;
    for (Loop &loop : out.loops)
        for (Point2 &p : loop.points)
            p = rotate(p, angle) + shift;
    return out;
}

Ring rectangle_ring(double x0, double y0, double x1, double y1)
{
    return {{x0, y0}, {x1, y0}, {x1, y1}, {x0, y1}};
}

Ring regular_polygon(Point2 center, double radius, int sides, double phase)
{
    Ring ring;
    ring.reserve(size_t(sides));
    for (int i = 0; i < sides; ++i) {
        const double a = phase + 2. * std::numbers::pi * i / sides;
        ring.push_back({center.x + radius * std::cos(a), center.y + radius * std::sin(a)});
    }
    return ring;
}

} // namespace printstiff
