#pragma once

#include "printstiff/cross_section.hpp"
#include "printstiff/mesh.hpp"
#include "printstiff/print_config.hpp"
#include "printstiff/slicer.hpp"

#include <string>
#include <vector>

namespace printstiff {

// Orthotropic filament data (MPa unless noted). The remaining fields are
// carried along for reports only.
struct FilamentProps
{
    std::string name;
    double      e_cross            = 0.; // X/Y-axis row of the datasheet
    double      e_cross_tol        = 0.;
    double      e_longitudinal     = 0.; // Z-axis row
    double      e_longitudinal_tol = 0.;
    double      poisson_ratio      = 0.;
    double      density            = 0.; // g/cm3
    double      filament_diameter  = 0.; // mm
    std::string printing_temperature;
    std::string bed_temperature;
    double      glass_transition   = 0.; // degC
    double      softening          = 0.; // degC
};

// PETG datasheet values used for the compression specimens.
FilamentProps petg_preset();
// Throws ConfigError for non-positive moduli or negative tolerance bands.
void validate(const FilamentProps &props);

// Z-printed parts are loaded along the Z-axis row (E_longitudinal), XY-printed
// parts along the X/Y row (E_cross). `swap` exchanges the two.
double select_modulus(BuildDirection direction, const FilamentProps &props, bool swap = false);
double select_modulus_tolerance(BuildDirection direction, const FilamentProps &props, bool swap = false);

struct AreaEntry
{
    int    layer_index = 0;
    double z           = 0.; // slice plane height, mm
    double area        = 0.; // effective cross-area, mm2
};

// Per-layer bookkeeping kept next to the profile for CSV dumps.
struct LayerRecord
{
    int    layer_index     = 0;
    double z               = 0.;
    double contour_area    = 0.;
    double perimeter       = 0.;
    double wall_length     = 0.;
    double infill_length   = 0.;
    double d_path          = 0.;
    double uncovered_area  = 0.;
    long   n_cross         = 0;
    double section_area    = 0.;
    double area            = 0.;
    bool   skipped         = false;
};

// Effective cross-area as a function of height, one constant value per layer.
struct AreaProfile
{
    std::vector<AreaEntry>   entries;
    double                   layer_thickness = 0.;
    double                   length          = 0.; // modeled length = layers * thickness
    double                   part_height     = 0.; // mesh extent along z
    double                   residual        = 0.; // part_height - length
    double                   nominal_area    = 0.; // solid section at mid-height
    BuildDirection           direction       = BuildDirection::Z;
    InfillPattern            pattern         = InfillPattern::Concentric;
    std::vector<LayerRecord> layers;
    std::vector<int>         skipped_layers;
};

struct ProfileOptions
{
    LayerPlane   plane            = LayerPlane::Mid;
    SectionModel section          = SectionModel::DiscSquare;
    Membership   membership       = Membership::Footprint;
    bool         skip_zero_layers = false;
    unsigned     threads          = 1;
};

// Builds a profile straight from areas; used by fixtures and tests.
AreaProfile make_profile(std::vector<double> areas, double layer_thickness, double nominal_area);

// Slices the mesh and evaluates every layer with the deposited-path model
// (direction Z) or the filament-count model (direction XY). Throws
// ZeroAreaLayer for a layer without material unless skip_zero_layers is set.
AreaProfile area_profile(const TriangleMesh &mesh, const PrintConfig &cfg, const ProfileOptions &options = {});

// Integral of dz / A(z), midpoint rule with one sample per layer (1/mm).
double compliance_integral(const AreaProfile &profile);
// Axial shortening (mm) under force F (N) for modulus E (MPa).
double displacement(const AreaProfile &profile, double modulus, double force);
// Elastic energy F^2 * C / (2E) in N*mm.
double strain_energy(const AreaProfile &profile, double modulus, double force);

struct LoadCase
{
    std::vector<double> forces; // N, strictly increasing, positive
};
// F_max * k / steps for k = 1..steps. Throws ConfigError.
LoadCase linear_load(double force_max, int steps);
void     validate(const LoadCase &load);

struct CurvePoint
{
    double force        = 0.; // N
    double displacement = 0.; // mm
    double stress       = 0.; // MPa, F / A_nom
    double strain       = 0.; // displacement / length
};

struct PredictionResult
{
    double                  modulus             = 0.; // E_z used, MPa
    double                  compliance_integral = 0.;
    std::vector<CurvePoint> curve;
    double                  e_effective = 0.;
    double                  e_band_low  = 0.;
    double                  e_band_high = 0.;
    std::string             config_hash;
};

// `modulus_tolerance` widens E_eff into a sensitivity band [E - tol, E + tol].
PredictionResult force_displacement_curve(const AreaProfile &profile, double modulus, const LoadCase &load,
                                          double modulus_tolerance = 0.);
// Nominal stress over nominal strain: E * length / (A_nom * C).
double effective_modulus(const AreaProfile &profile, double modulus);
double effective_modulus(const PredictionResult &result);

} // namespace printstiff
