#pragma once

// Brute-force reference computations. Nothing here shares code paths with
// the slicer, the toolpath model or the filament counter it is used to check.

#include "printstiff/geometry.hpp"

#include <cstdint>
#include <iosfwd>
#include <utility>
#include <vector>

namespace printstiff::oracle {

using Stroke = std::pair<Point2, Point2>;

struct RasterGrid
{
    double               cell = 0.;
    Point2               origin; // lower-left corner of cell (0, 0)
    int                  nx   = 0;
    int                  ny   = 0;
    std::vector<uint8_t> occupied;

    long   occupied_cells() const;
    double measured_area() const { return double(occupied_cells()) * cell * cell; }
};

// Stamps every stroke as a capsule of the given bead width (rectangle plus
// disc caps) and every closed ring as the strokes along its edges. A cell is
// occupied when its center lies in at least one capsule, so overlaps count
// once.
RasterGrid rasterize(const std::vector<Ring> &closed, const std::vector<Stroke> &open, double bead_width,
                     double cell);
double     raster_area(const std::vector<Ring> &closed, const std::vector<Stroke> &open, double bead_width,
                       double cell);

// Plain PBM (P1) dump, row 0 at the top.
void write_pbm(const RasterGrid &grid, std::ostream &out);

// Lattice points phase + (i * h, j * v), i, j >= 0, tested one by one with an
// even-odd ray cast against every loop.
long grid_count_oracle(const LayerContour &contour, double spacing_h, double spacing_v, Point2 phase);

// Prismatic bar: F L / (E A).
double closed_form_bar(double force, double length, double modulus, double area);
// Bar with A(z) = A0 (1 + z / L): (F / E) (L / A0) ln 2.
double closed_form_taper(double force, double length, double modulus, double base_area);

} // namespace printstiff::oracle
