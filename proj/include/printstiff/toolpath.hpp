#pragma once

#include "printstiff/geometry.hpp"
#include "printstiff/print_config.hpp"

#include <vector>

namespace printstiff {

struct Segment2
{
    Point2 a;
    Point2 b;
};

// Bead centerlines of one layer: closed rings (walls, concentric infill) and
// open segments (raster infill and zig-zag connectors).
struct PathSet
{
    std::vector<Ring>     rings;
    std::vector<Segment2> segments;

    void append(const PathSet &other)
    {
        rings.insert(rings.end(), other.rings.begin(), other.rings.end());
        segments.insert(segments.end(), other.segments.begin(), other.segments.end());
    }
};

struct WallPaths
{
    PathSet      paths;
    double       wall_length = 0.;
    int          wall_count  = 0;     // walls that survived offsetting
    bool         collapsed   = false; // requested walls but not even the first fits
    LayerContour inner;               // contour inset by wall_line_count * line_width
};

// Wall k (k = 1..wall_line_count) is the contour inset by (k - 0.5) * line_width.
WallPaths wall_paths(const LayerContour &contour, const PrintConfig &cfg);

struct InfillPaths
{
    PathSet paths;
    double  infill_length = 0.;
    double  raster_angle  = 0.; // radians, 0 for Concentric
    int     passes        = 0;  // raster passes or concentric rings
};

// Raster direction of a layer: Lines0_90 alternates 0/90 deg, Lines45_neg45
// and ZigZag alternate +45/-45 deg. Concentric has no raster direction.
double raster_angle(InfillPattern pattern, int layer_index);

// Infill of the region left inside the walls at 100 % density, bead spacing
// line_width.
InfillPaths infill_paths(const LayerContour &inner, InfillPattern pattern, const PrintConfig &cfg, int layer_index);

// Parts of the line y = pass center, in a frame where passes run along +x,
// where a bead of the given width fits entirely inside the region. One entry
// per pass, each a sorted list of [x0, x1] intervals. First pass sits half a
// spacing above the region's minimum y.
std::vector<std::vector<std::pair<double, double>>> raster_passes(const LayerContour &region, double spacing);

struct LayerToolpath
{
    int    layer_index    = 0;
    double wall_length    = 0.;
    double infill_length  = 0.;
    double d_path         = 0.;
    double contour_area   = 0.;
    double deposited_area = 0.; // d_path * line_width
    double uncovered_area = 0.; // contour_area - deposited_area
    bool   walls_collapsed = false;
};

struct LayerArea
{
    double        area = 0.;
    LayerToolpath toolpath;
};

// Deposited cross-area of a Z-printed layer: extruder path length times line
// width. Throws ZeroArea when the contour is not empty but nothing fits.
LayerArea layer_area_z(const LayerContour &contour, const PrintConfig &cfg, int layer_index);

// All centerlines of a Z-printed layer, for visual or raster checks.
PathSet layer_paths(const LayerContour &contour, const PrintConfig &cfg, int layer_index);

} // namespace printstiff
