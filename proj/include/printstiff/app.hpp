#pragma once

#include "printstiff/cross_section.hpp"
#include "printstiff/mesh.hpp"
#include "printstiff/print_config.hpp"
#include "printstiff/reference.hpp"
#include "printstiff/slicer.hpp"
#include "printstiff/stiffness.hpp"

#include <filesystem>
#include <functional>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include <json.hpp>

namespace printstiff::app {

enum ExitCode : int {
    kOk           = 0,
    kFailure      = 1,
    kConfigError  = 2,
    kGeometry     = 3,
    kZeroArea     = 4,
};

enum class Specimen { None, Cylinder, Box };

std::string_view to_string(Specimen s);
Specimen         parse_specimen(std::string_view s);
std::string_view to_string(LayerPlane p);
LayerPlane       parse_layer_plane(std::string_view s);

// Everything a run needs. Built from defaults, then a JSON document, then
// command-line overrides.
struct RunConfig
{
    std::optional<std::filesystem::path> mesh;
    Specimen                             specimen = Specimen::None;
    PrintConfig                          print;
    FilamentProps                        material = petg_preset();
    double                               force_max = 600.; // N
    int                                  steps     = 10;
    std::filesystem::path                out_dir   = "out";
    SectionModel                         section   = SectionModel::DiscSquare;
    Membership                           membership = Membership::Footprint;
    LayerPlane                           plane      = LayerPlane::Mid;
    bool                                 swap_moduli      = false;
    bool                                 skip_zero_layers = false;
    unsigned                             threads          = 1;
};

// Named material presets ("PETG"). Throws ConfigError.
FilamentProps material_preset(std::string_view name);

// Applies the keys present in `doc` on top of `cfg`. Unknown keys and bad
// values throw ConfigError.
void      apply_json(RunConfig &cfg, const nlohmann::json &doc);
RunConfig load_run_config(const std::filesystem::path &path);

// Throws ConfigError on inconsistent settings; returns warnings. The
// geometry source is checked by load_run_mesh.
std::vector<std::string> validate(const RunConfig &cfg);

// Canonical echo of the inputs that influence results (thread count and
// output location excluded), and its FNV-1a hash.
nlohmann::json inputs_json(const RunConfig &cfg);
std::string    config_hash(const RunConfig &cfg);

// The specimen generator or the mesh file. Throws ConfigError when neither is
// usable.
TriangleMesh load_run_mesh(const RunConfig &cfg);

struct Prediction
{
    AreaProfile              profile;
    PredictionResult         result;
    std::vector<std::string> warnings;
};

Prediction predict(const RunConfig &cfg, const TriangleMesh &mesh);
Prediction predict(const RunConfig &cfg);

std::string summary_json(const RunConfig &cfg, const Prediction &p);
std::string curve_csv(const PredictionResult &r);
std::string profile_csv(const AreaProfile &profile);
// Per-layer toolpath (Z) or filament-count (XY) table.
std::string layers_csv(const AreaProfile &profile);
std::string contour_csv(const std::vector<LayerContour> &contours, const std::vector<int> &layer_indices);

// Writes via a temporary file in the same directory and a rename.
void write_atomic(const std::filesystem::path &path, std::string_view content);

// Runs `fn`, reporting library errors on `err` and mapping them to exit codes.
int guarded(const std::function<void()> &fn, std::ostream &err);

int cmd_predict(const RunConfig &cfg, std::ostream &out, std::ostream &err);
int cmd_curve(const RunConfig &cfg, std::ostream &out, std::ostream &err);
// `z` slices a single plane; otherwise the whole layer stack is dumped.
int cmd_slice(const RunConfig &cfg, std::optional<double> z, std::ostream &out, std::ostream &err);

struct CompareJob
{
    BuildDirection direction;
    InfillPattern  pattern;
};

struct CompareRow
{
    std::string    label;
    BuildDirection direction;
    InfillPattern  pattern;
    double         predicted;          // this run
    double         experimental;       // reference test result
    double         error;              // |predicted - experimental| / experimental
    double         reference_predicted;    // reference prediction
    double         reference_error;        // as printed
    double         reference_error_recomputed;
    bool           reference_error_flagged; // printed and recomputed differ by > 0.5 points
};

struct CompareReport
{
    std::vector<CompareRow> rows;
    std::string             reference_digest;
};

// Default job set: the three Z rows and the four XY rows of the reference.
std::vector<CompareJob> default_compare_jobs();
CompareReport           compare(const RunConfig &cfg, const std::vector<CompareJob> &jobs);
std::string             compare_text(const CompareReport &report);
std::string             compare_json(const CompareReport &report);
int cmd_compare(const RunConfig &cfg, const std::vector<CompareJob> &jobs, std::ostream &out, std::ostream &err);

inline constexpr double kPrintedErrorSlack = 0.5; // percentage points

} // namespace printstiff::app
