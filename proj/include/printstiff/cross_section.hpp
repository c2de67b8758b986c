#pragma once

#include "printstiff/geometry.hpp"
#include "printstiff/print_config.hpp"

#include <string_view>

namespace printstiff {

// Area of one filament cross-section.
//   DiscSquare: pi * (t/2)^2 + t^2, t = layer thickness
//   Stadium:    (w - t) * t + pi * (t/2)^2, w = line width
enum class SectionModel { DiscSquare, Stadium };

// Which lattice points count as filaments:
//   Center:    the filament center lies inside the contour
//   Footprint: the whole stadium footprint (w wide, t tall) lies inside
enum class Membership { Center, Footprint };

std::string_view to_string(SectionModel m);
std::string_view to_string(Membership m);
SectionModel     parse_section_model(std::string_view s);
Membership       parse_membership(std::string_view s);

// Throws DegenerateFilament when the layer thickness is not positive.
double filament_section_area(const PrintConfig &cfg, SectionModel kind);

// Lattice of filament centers over a contour cut across an XY-printed part:
// x spacing = line width, y spacing = layer thickness (y is the printer's
// build axis), first point half a spacing from the contour's bounding-box
// minimum.
struct FilamentGrid
{
    double spacing_h = 0.;
    double spacing_v = 0.;
    Point2 phase;     // first lattice point
    long   n_cross = 0;
};

FilamentGrid count_filament_sections(const LayerContour &contour, const PrintConfig &cfg,
                                     Membership membership = Membership::Center);

struct LayerSectionArea
{
    double       area         = 0.;
    double       section_area = 0.;
    FilamentGrid grid;
};

// n_cross times the filament section area. Throws ZeroArea when the contour
// is not empty but no filament is counted.
LayerSectionArea layer_area_xy(const LayerContour &contour, const PrintConfig &cfg, SectionModel kind,
                               Membership membership = Membership::Center);

} // namespace printstiff
