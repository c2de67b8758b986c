#pragma once

#include "printstiff/geometry.hpp"
#include "printstiff/mesh.hpp"

#include <vector>

namespace printstiff {

// Planes closer than this to a mesh vertex are nudged upward before slicing.
inline constexpr double kVertexClearance = 1e-6;
// Intersection points closer than this are treated as the same loop vertex.
inline constexpr double kSnapTolerance = 1e-6;

enum class LayerPlane {
    Mid,    // z = (i + 0.5) * thickness above the mesh bottom
    Bottom, // z = i * thickness
};

struct SliceOptions
{
    LayerPlane plane            = LayerPlane::Mid;
    bool       require_manifold = false;
    unsigned   threads          = 1;
};

// Intersection of the solid with the horizontal plane at z. When z sits on a
// vertex height the plane is raised by `nudge` (repeatedly, a few times).
// Throws DegenerateSlice or OpenLoop.
LayerContour slice_at(const TriangleMesh &mesh, double z, double nudge = 1e-6, bool require_manifold = false);

// Uniform layer stack of the part along z.
struct SliceStack
{
    std::vector<LayerContour> contours;
    double                    layer_thickness = 0.;
    double                    part_height     = 0.; // L_z of the part
    double                    base_z          = 0.; // z of the mesh bottom
    double                    residual        = 0.; // height left over above the last full layer
    LayerPlane                plane           = LayerPlane::Mid;

    size_t size() const { return contours.size(); }
    // Height of layer i's bottom face above the part base: i * thickness.
    double layer_height(size_t i) const { return double(i) * layer_thickness; }
};

// floor(height / thickness), robust to representation error at exact multiples.
int layer_count(double height, double thickness);

// Throws InvalidThickness unless 0 < thickness < part height; slice errors
// are rethrown with their layer index. Output does not depend on `threads`.
SliceStack slice_stack(const TriangleMesh &mesh, double layer_thickness, const SliceOptions &options = {});

} // namespace printstiff
