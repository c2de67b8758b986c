#include "printstiff/stiffness.hpp"

#include "printstiff/errors.hpp"
#include "printstiff/toolpath.hpp"
#include "parallel.hpp"

#include <cmath>
#include <exception>

namespace printstiff {

FilamentProps petg_preset()
{
    FilamentProps p;
    p.name                 = "PETG";
    p.e_cross              = 1472.;
    p.e_cross_tol          = 270.;
    p.e_longitudinal       = 1087.;
    p.e_longitudinal_tol   = 79.;
    p.poisson_ratio        = 0.38;
    p.density              = 1.27;
    p.filament_diameter    = 2.85;
    p.printing_temperature = "235 +/- 10";
    p.bed_temperature      = "60 - 90";
    p.glass_transition     = 81.;
    p.softening            = 84.;
    return p;
}

void validate(const FilamentProps &props)
{
    if (!(props.e_cross > 0.) || !(props.e_longitudinal > 0.))
        throw ConfigError("filament moduli must be positive");
    if (props.e_cross_tol < 0. || props.e_longitudinal_tol < 0.)
        throw ConfigError("modulus tolerance bands must be non-negative");
}

double select_modulus(BuildDirection direction, const FilamentProps &props, bool swap)
{
    const bool z = (direction == BuildDirection::Z) != swap;
    return z ? props.e_longitudinal : props.e_cross;
}

double select_modulus_tolerance(BuildDirection direction, const FilamentProps &props, bool swap)
{
    const bool z = (direction == BuildDirection::Z) != swap;
    return z ? props.e_longitudinal_tol : props.e_cross_tol;
}

AreaProfile make_profile(std::vector<double> areas, double layer_thickness, double nominal_area)
{
    AreaProfile p;
    p.layer_thickness = layer_thickness;
    p.nominal_area    = nominal_area;
    for (size_t i = 0; i < areas.size(); ++i) {
        if (!(areas[i] > 0.))
            throw ZeroAreaLayer(int(i));
        p.entries.push_back({int(i), (double(i) + 0.5) * layer_thickness, areas[i]});
    }
    p.length      = double(areas.size()) * layer_thickness;
    p.part_height = p.length;
    return p;
}

AreaProfile area_profile(const TriangleMesh &mesh, const PrintConfig &cfg, const ProfileOptions &options)
{
    validate(cfg);
    SliceOptions so;
    so.plane   = options.plane;
    so.threads = options.threads;
    const SliceStack stack = slice_stack(mesh, cfg.layer_thickness, so);
    const int        n     = int(stack.size());

    AreaProfile profile;
    profile.layer_thickness = cfg.layer_thickness;
    profile.part_height     = stack.part_height;
    profile.residual        = stack.residual;
    profile.length          = n * cfg.layer_thickness;
    profile.direction       = cfg.build_direction;
    profile.pattern         = cfg.infill_pattern;
    profile.nominal_area =
        contour_area(slice_at(mesh, stack.base_z + 0.5 * stack.part_height, 1e-5 * cfg.layer_thickness));
    if (!(profile.nominal_area > 0.))
        throw GeometryError("solid cross-section at mid-height is empty");

    profile.layers.resize(size_t(n));
    std::vector<std::exception_ptr> errors(static_cast<size_t>(n));
    detail::parallel_for(n, options.threads, [&](int i) {
        const LayerContour &c   = stack.contours[size_t(i)];
        LayerRecord        &rec = profile.layers[size_t(i)];
        rec.layer_index         = i;
        rec.z                   = c.z;
        rec.contour_area        = c.area;
        rec.perimeter           = c.perimeter;
        try {
            if (cfg.build_direction == BuildDirection::Z) {
                const LayerArea la = layer_area_z(c, cfg, i);
                rec.wall_length    = la.toolpath.wall_length;
                rec.infill_length  = la.toolpath.infill_length;
                rec.d_path         = la.toolpath.d_path;
                rec.uncovered_area = la.toolpath.uncovered_area;
                rec.area           = la.area;
            } else if (!c.empty()) {
                const LayerSectionArea la = layer_area_xy(c, cfg, options.section, options.membership);
                rec.n_cross               = la.grid.n_cross;
                rec.section_area          = la.section_area;
                rec.area                  = la.area;
                rec.uncovered_area        = c.area - la.area;
            }
        } catch (const ZeroArea &) {
            rec.area = 0.;
        } catch (...) {
            errors[size_t(i)] = std::current_exception();
        }
    });
    for (const auto &e : errors)
        if (e)
            std::rethrow_exception(e);

    for (LayerRecord &rec : profile.layers) {
        if (rec.area > 0.) {
            profile.entries.push_back({rec.layer_index, rec.z, rec.area});
            continue;
        }
        if (!options.skip_zero_layers)
            throw ZeroAreaLayer(rec.layer_index);
        rec.skipped = true;
        profile.skipped_layers.push_back(rec.layer_index);
    }
    if (profile.entries.empty())
        throw ZeroAreaLayer(0);
    return profile;
}

double compliance_integral(const AreaProfile &profile)
{
    double c = 0.;
    for (const AreaEntry &e : profile.entries)
        c += profile.layer_thickness / e.area;
    return c;
}

double displacement(const AreaProfile &profile, double modulus, double force)
{
    return force / modulus * compliance_integral(profile);
}

double strain_energy(const AreaProfile &profile, double modulus, double force)
{
    return force * force * compliance_integral(profile) / (2. * modulus);
}

LoadCase linear_load(double force_max, int steps)
{
    if (!(force_max > 0.) || steps < 1)
        throw ConfigError("load case needs a positive maximum force and at least one step");
    LoadCase load;
    for (int k = 1; k <= steps; ++k)
        load.forces.push_back(force_max * k / steps);
    return load;
}

void validate(const LoadCase &load)
{
    if (load.forces.empty())
        throw ConfigError("load case has no force steps");
    for (size_t i = 0; i < load.forces.size(); ++i) {
        if (!(load.forces[i] > 0.))
            throw ConfigError("load case forces must be positive");
        if (i > 0 && !(load.forces[i] > load.forces[i - 1]))
            throw ConfigError("load case forces must be strictly increasing");
    }
}

PredictionResult force_displacement_curve(const AreaProfile &profile, double modulus, const LoadCase &load,
                                          double modulus_tolerance)
{
    validate(load);
    if (!(modulus > 0.))
        throw ConfigError("modulus must be positive");
    PredictionResult r;
    r.modulus             = modulus;
    r.compliance_integral = compliance_integral(profile);
    for (double f : load.forces) {
        CurvePoint p;
        p.force        = f;
        p.displacement = f / modulus * r.compliance_integral;
        p.stress       = f / profile.nominal_area;
        p.strain       = p.displacement / profile.length;
        r.curve.push_back(p);
    }
    r.e_effective = effective_modulus(profile, modulus);
    r.e_band_low  = effective_modulus(profile, std::max(modulus - modulus_tolerance, 0.));
    r.e_band_high = effective_modulus(profile, modulus + modulus_tolerance);
    return r;
}

double effective_modulus(const AreaProfile &profile, double modulus)
{
    return modulus * profile.length / (profile.nominal_area * compliance_integral(profile));
}

double effective_modulus(const PredictionResult &result)
{
    // Least-squares slope of stress over strain through the origin.
    double num = 0., den = 0.;
    for (const CurvePoint &p : result.curve) {
        num += p.stress * p.strain;
        den += p.strain * p.strain;
    }
    return den > 0. ? num / den : 0.;
}

} // namespace printstiff
