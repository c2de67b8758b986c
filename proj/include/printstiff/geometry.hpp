#pragma once

#include <algorithm>
#include <cmath>
#include <limits>
#include <span>
#include <vector>

namespace printstiff {

// Geometric tolerance in mm (lengths) and mm² (areas).
inline constexpr double kGeomEps = 1e-6;

struct Point2
{
    double x = 0.;
    double y = 0.;

    friend Point2 operator+(Point2 a, Point2 b) { return {a.x + b.x, a.y + b.y}; }
    friend Point2 operator-(Point2 a, Point2 b) { return {a.x - b.x, a.y - b.y}; }
    friend Point2 operator*(double s, Point2 a) { return {s * a.x, s * a.y}; }
    friend Point2 operator*(Point2 a, double s) { return {s * a.x, s * a.y}; }
    friend bool   operator==(Point2 a, Point2 b) = default;
};

inline double dot(Point2 a, Point2 b) { return a.x * b.x + a.y * b.y; }
inline double cross(Point2 a, Point2 b) { return a.x * b.y - a.y * b.x; }
inline double norm(Point2 a) { return std::hypot(a.x, a.y); }
inline Point2 left_normal(Point2 d) { return {-d.y, d.x}; }
inline Point2 rotate(Point2 p, double angle)
{
    const double c = std::cos(angle), s = std::sin(angle);
    return {c * p.x - s * p.y, s * p.x + c * p.y};
}

struct Point3
{
    double x = 0.;
    double y = 0.;
    double z = 0.;
};

struct BoundingBox2
{
    Point2 min{std::numeric_limits<double>::infinity(), std::numeric_limits<double>::infinity()};
    Point2 max{-std::numeric_limits<double>::infinity(), -std::numeric_limits<double>::infinity()};

    bool valid() const { return min.x <= max.x && min.y <= max.y; }
    void merge(Point2 p)
    {
        min.x = std::min(min.x, p.x);
        min.y = std::min(min.y, p.y);
        max.x = std::max(max.x, p.x);
        max.y = std::max(max.y, p.y);
    }
};

// Closed vertex ring; the closing edge back to front() is implicit.
using Ring = std::vector<Point2>;

// Shoelace area, positive for counter-clockwise rings.
double signed_area(std::span<const Point2> ring);
double ring_length(std::span<const Point2> ring);
// Winding number of the ring around p. Points on the boundary give an
// unspecified but deterministic answer.
int winding_number(Point2 p, std::span<const Point2> ring);

struct Loop
{
    Ring points;
    bool is_hole = false;
    // Index of the enclosing outer loop for holes, -1 for outers.
    int parent = -1;
};

// Planar cross-section at height z. Outer loops are counter-clockwise and
// holes clockwise, so the solid always lies to the left of every edge.
struct LayerContour
{
    double            z = 0.;
    std::vector<Loop> loops;
    double            area      = 0.;
    double            perimeter = 0.;

    bool empty() const { return loops.empty(); }
};

double contour_area(const LayerContour &contour);
double contour_perimeter(const LayerContour &contour);

// Nonzero winding over all loops; holes are clockwise and cancel their outer.
bool         contains(const LayerContour &contour, Point2 p);
BoundingBox2 bounding_box(const LayerContour &contour);

// Builds a normalized contour from raw rings of any orientation: nesting depth
// decides outer vs hole, orientation is fixed accordingly, holes get their
// parent, degenerate rings are dropped and area/perimeter are filled in.
LayerContour make_contour(double z, std::vector<Ring> rings);

LayerContour transformed(const LayerContour &contour, double angle, Point2 shift = {});

// Convenience constructors used by fixtures and the CLI.
Ring rectangle_ring(double x0, double y0, double x1, double y1);
Ring regular_polygon(Point2 center, double radius, int sides, double phase = 0.);

} // namespace printstiff
