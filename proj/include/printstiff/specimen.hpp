#pragma once

#include "printstiff/mesh.hpp"

namespace printstiff {

// Closed analytic solids with outward-facing triangles.

TriangleMesh make_box(Point3 min, Point3 max);
// Right prism over a star-shaped (from its vertex centroid) ring, bottom at z0.
TriangleMesh make_prism(const Ring &ring, double z0, double height);
// Prism over the region between `outer` and `inner`; both rings must have
// the same vertex count with vertex i of each facing the other.
TriangleMesh make_tube(const Ring &outer, const Ring &inner, double z0, double height);
// Axis along +z, base centered at the origin on z = 0.
TriangleMesh make_cylinder(double radius, double height, int segments = 256);
TriangleMesh make_sphere(double radius, Point3 center, int slices, int stacks);

// Compression specimen: r = 12.7 mm, h = 50.8 mm.
inline constexpr double kSpecimenRadius = 12.7;
inline constexpr double kSpecimenHeight = 50.8;
TriangleMesh specimen_cylinder(int segments = 256);

} // namespace printstiff
