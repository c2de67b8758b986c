#include "printstiff/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <ostream>

namespace printstiff::oracle {

long RasterGrid::occupied_cells() const
{
    return long(std::count(occupied.begin(), occupied.end(), uint8_t(1)));
}

namespace {

void stamp(RasterGrid &g, Point2 a, Point2 b, double r)
{
    const int i0 = std::max(0, int(std::floor((std::min(a.x, b.x) - r - g.origin.x) / g.cell)));
    const int i1 = std::min(g.nx - 1, int(std::ceil((std::max(a.x, b.x) + r - g.origin.x) / g.cell)));
    const int j0 = std::max(0, int(std::floor((std::min(a.y, b.y) - r - g.origin.y) / g.cell)));
    const int j1 = std::min(g.ny - 1, int(std::ceil((std::max(a.y, b.y) + r - g.origin.y) / g.cell)));
    const double dx = b.x - a.x, dy = b.y - a.y;
    const double l2 = dx * dx + dy * dy;
    const double r2 = r * r;
    for (int j = j0; j <= j1; ++j) {
        const double py = g.origin.y + (j + 0.5) * g.cell;
        for (int i = i0; i <= i1; ++i) {
            const double px = g.origin.x + (i + 0.5) * g.cell;
            double       t  = l2 > 0. ? ((px - a.x) * dx + (py - a.y) * dy) / l2 : 0.;
            t               = std::clamp(t, 0., 1.);
            const double ex = px - (a.x + t * dx), ey = py - (a.y + t * dy);
            if (ex * ex + ey * ey <= r2)
                g.occupied[size_t(j) * size_t(g.nx) + size_t(i)] = 1;
        }
    }
}

} // namespace

RasterGrid rasterize(const std::vector<Ring> &closed, const std::vector<Stroke> &open, double bead_width,
                     double cell)
{
    RasterGrid g;
    g.cell = cell;
    double x0 = INFINITY, y0 = INFINITY, x1 = -INFINITY, y1 = -INFINITY;
    auto grow = [&](Point2 p) {
        x0 = std::min(x0, p.x);
        y0 = std::min(y0, p.y);
        x1 = std::max(x1, p.x);
        y1 = std::max(y1, p.y);
    };
    for (const Ring &r : closed)
        for (const Point2 &p : r)
            grow(p);
    for (const Stroke &s : open) {
        grow(s.first);
        grow(s.second);
    }
    if (!(x0 <= x1) || !(cell > 0.))
        return g;
    const double r = 0.5 * bead_width;
    g.origin       = {x0 - r - cell, y0 - r - cell};
    g.nx           = int(std::ceil((x1 - x0 + 2. * r) / cell)) + 3;
    g.ny           = int(std::ceil((y1 - y0 + 2. * r) / cell)) + 3;
    g.occupied.assign(size_t(g.nx) * size_t(g.ny), 0);
    for (const Ring &ring : closed)
        for (size_t i = 0; i < ring.size(); ++i)
            stamp(g, ring[i], ring[(i + 1) % ring.size()], r);
    for (const Stroke &s : open)
        stamp(g, s.first, s.second, r);
    return g;
}

double raster_area(const std::vector<Ring> &closed, const std::vector<Stroke> &open, double bead_width, double cell)
{
    return rasterize(closed, open, bead_width, cell).measured_area();
}

void write_pbm(const RasterGrid &grid, std::ostream &out)
{
    out << "P1\n" << grid.nx << ' ' << grid.ny << '\n';
    for (int j = grid.ny - 1; j >= 0; --j) {
        for (int i = 0; i < grid.nx; ++i)
            out << (grid.occupied[size_t(j) * size_t(grid.nx) + size_t(i)] ? '1' : '0');
        out << '\n';
    }
}

namespace {

bool inside_even_odd(const LayerContour &contour, double px, double py)
{
    bool in = false;
    for (const Loop &loop : contour.loops) {
        const auto &pts = loop.points;
        for (size_t i = 0, j = pts.size() - 1; i < pts.size(); j = i++) {
            const bool straddles = (pts[i].y > py) != (pts[j].y > py);
            if (straddles && px < (pts[j].x - pts[i].x) * (py - pts[i].y) / (pts[j].y - pts[i].y) + pts[i].x)
                in = !in;
        }
    }
    return in;
}

} // namespace

long grid_count_oracle(const LayerContour &contour, double spacing_h, double spacing_v, Point2 phase)
{
    double xmax = -INFINITY, ymax = -INFINITY;
    for (const Loop &loop : contour.loops)
        for (const Point2 &p : loop.points) {
            xmax = std::max(xmax, p.x);
            ymax = std::max(ymax, p.y);
        }
    long count = 0;
    for (long j = 0; phase.y + double(j) * spacing_v < ymax; ++j)
        for (long i = 0; phase.x + double(i) * spacing_h < xmax; ++i)
            if (inside_even_odd(contour, phase.x + double(i) * spacing_h, phase.y + double(j) * spacing_v))
                ++count;
    return count;
}

double closed_form_bar(double force, double length, double modulus, double area)
{
    return force * length / (modulus * area);
}

double closed_form_taper(double force, double length, double modulus, double base_area)
{
    return force / modulus * (length / base_area) * std::numbers::ln2;
}

} // namespace printstiff::oracle
