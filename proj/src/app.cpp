#include "printstiff/app.hpp"

#include "printstiff/errors.hpp"
#include "printstiff/specimen.hpp"

#include <algorithm>
#include <charconv>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <map>
#include <sstream>

namespace printstiff::app {

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

std::string lower(std::string_view s)
{
    std::string out(s);
    std::transform(out.begin(), out.end(), out.begin(), [](unsigned char c) { return char(std::tolower(c)); });
    return out;
}

// Shortest representation that round-trips; stable across runs.
std::string num(double v)
{
    char buf[64];
    auto [end, ec] = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, end);
}

std::string fixed(double v, int digits)
{
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*f", digits, v);
    return buf;
}

std::string fnv1a(std::string_view s)
{
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ull;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

template <class T>
T get(const json &doc, std::string_view key)
{
    try {
        return doc.get<T>();
    } catch (const json::exception &) {
        throw ConfigError("config key '" + std::string(key) + "' has the wrong type");
    }
}

void apply_print(PrintConfig &p, const json &doc)
{
    if (!doc.is_object())
        throw ConfigError("config key 'print' must be an object");
    for (const auto &[key, v] : doc.items()) {
        if (key == "line_width")
            p.line_width = get<double>(v, key);
        else if (key == "layer_thickness")
            p.layer_thickness = get<double>(v, key);
        else if (key == "wall_thickness")
            p.wall_thickness = get<double>(v, key);
        else if (key == "wall_line_count")
            p.wall_line_count = get<int>(v, key);
        else if (key == "nozzle_size")
            p.nozzle_size = get<double>(v, key);
        else if (key == "infill_density")
            p.infill_density = get<double>(v, key);
        else if (key == "printing_speed")
            p.printing_speed = get<double>(v, key);
        else if (key == "wall_pattern")
            p.wall_pattern = get<std::string>(v, key);
        else if (key == "infill_pattern")
            p.infill_pattern = parse_pattern(get<std::string>(v, key));
        else if (key == "build_direction")
            p.build_direction = parse_direction(get<std::string>(v, key));
        else
            throw ConfigError("unknown print key '" + key + "'");
    }
}

FilamentProps material_from_json(const json &doc)
{
    if (doc.is_string())
        return material_preset(doc.get<std::string>());
    if (!doc.is_object())
        throw ConfigError("config key 'material' must be a preset name or an object");
    FilamentProps m = doc.contains("preset") ? material_preset(get<std::string>(doc["preset"], "preset")) : FilamentProps{};
    if (!doc.contains("preset"))
        m.name = "custom";
    for (const auto &[key, v] : doc.items()) {
        if (key == "preset")
            continue;
        if (key == "name")
            m.name = get<std::string>(v, key);
        else if (key == "e_cross")
            m.e_cross = get<double>(v, key);
        else if (key == "e_cross_tol")
            m.e_cross_tol = get<double>(v, key);
        else if (key == "e_longitudinal")
            m.e_longitudinal = get<double>(v, key);
        else if (key == "e_longitudinal_tol")
            m.e_longitudinal_tol = get<double>(v, key);
        else if (key == "poisson_ratio")
            m.poisson_ratio = get<double>(v, key);
        else if (key == "density")
            m.density = get<double>(v, key);
        else if (key == "filament_diameter")
            m.filament_diameter = get<double>(v, key);
        else
            throw ConfigError("unknown material key '" + key + "'");
    }
    return m;
}

json material_json(const FilamentProps &m)
{
    return {{"name", m.name},
            {"e_cross", m.e_cross},
            {"e_cross_tol", m.e_cross_tol},
            {"e_longitudinal", m.e_longitudinal},
            {"e_longitudinal_tol", m.e_longitudinal_tol},
            {"poisson_ratio", m.poisson_ratio},
            {"density", m.density},
            {"filament_diameter", m.filament_diameter}};
}

} // namespace

std::string_view to_string(Specimen s)
{
    switch (s) {
    case Specimen::None: return "none";
    case Specimen::Cylinder: return "cylinder";
    case Specimen::Box: return "box";
    }
    return "none";
}

Specimen parse_specimen(std::string_view s)
{
    const std::string l = lower(s);
    if (l == "cylinder")
        return Specimen::Cylinder;
    if (l == "box")
        return Specimen::Box;
    if (l == "none" || l.empty())
        return Specimen::None;
    throw ConfigError("unknown specimen '" + std::string(s) + "' (cylinder, box)");
}

std::string_view to_string(LayerPlane p)
{
    return p == LayerPlane::Mid ? "mid" : "bottom";
}

LayerPlane parse_layer_plane(std::string_view s)
{
    const std::string l = lower(s);
    if (l == "mid" || l == "middle")
        return LayerPlane::Mid;
    if (l == "bottom")
        return LayerPlane::Bottom;
    throw ConfigError("unknown layer plane '" + std::string(s) + "' (mid, bottom)");
}

FilamentProps material_preset(std::string_view name)
{
    const std::string l = lower(name);
    if (l == "petg")
        return petg_preset();
    throw ConfigError("unknown material preset '" + std::string(name) + "'");
}

void apply_json(RunConfig &cfg, const json &doc)
{
    if (!doc.is_object())
        throw ConfigError("config must be a JSON object");
    for (const auto &[key, v] : doc.items()) {
        if (key == "mesh") {
            if (v.is_null())
                cfg.mesh.reset();
            else
                cfg.mesh = fs::path(get<std::string>(v, key));
        } else if (key == "specimen") {
            cfg.specimen = parse_specimen(get<std::string>(v, key));
        } else if (key == "print") {
            apply_print(cfg.print, v);
        } else if (key == "pattern") {
            cfg.print.infill_pattern = parse_pattern(get<std::string>(v, key));
        } else if (key == "direction") {
            cfg.print.build_direction = parse_direction(get<std::string>(v, key));
        } else if (key == "material") {
            cfg.material = material_from_json(v);
        } else if (key == "force_max") {
            cfg.force_max = get<double>(v, key);
        } else if (key == "steps") {
            cfg.steps = get<int>(v, key);
        } else if (key == "out_dir") {
            cfg.out_dir = get<std::string>(v, key);
        } else if (key == "section_model") {
            cfg.section = parse_section_model(get<std::string>(v, key));
        } else if (key == "membership") {
            cfg.membership = parse_membership(get<std::string>(v, key));
        } else if (key == "layer_plane") {
            cfg.plane = parse_layer_plane(get<std::string>(v, key));
        } else if (key == "swap_moduli") {
            cfg.swap_moduli = get<bool>(v, key);
        } else if (key == "skip_zero_layers") {
            cfg.skip_zero_layers = get<bool>(v, key);
        } else if (key == "threads") {
            const int t = get<int>(v, key);
            if (t < 1)
                throw ConfigError("threads must be at least 1");
            cfg.threads = unsigned(t);
        } else {
            throw ConfigError("unknown config key '" + key + "'");
        }
    }
}

RunConfig load_run_config(const fs::path &path)
{
    std::ifstream in(path);
    if (!in)
        throw ConfigError("cannot open config file '" + path.string() + "'");
    json doc;
    try {
        doc = json::parse(in);
    } catch (const json::parse_error &e) {
        throw ConfigError("config file '" + path.string() + "' is not valid JSON: " + e.what());
    }
    RunConfig cfg;
    apply_json(cfg, doc);
    // Relative paths in a config file are relative to the file.
    if (cfg.mesh && cfg.mesh->is_relative())
        cfg.mesh = path.parent_path() / *cfg.mesh;
    if (doc.contains("out_dir") && cfg.out_dir.is_relative())
        cfg.out_dir = path.parent_path() / cfg.out_dir;
    return cfg;
}

std::vector<std::string> validate(const RunConfig &cfg)
{
    std::vector<std::string> warnings = printstiff::validate(cfg.print);
    printstiff::validate(cfg.material);
    if (!(cfg.force_max > 0.))
        throw ConfigError("force_max must be positive");
    if (cfg.steps < 1)
        throw ConfigError("steps must be at least 1");
    return warnings;
}

json inputs_json(const RunConfig &cfg)
{
    const PrintConfig &p = cfg.print;
    return {
        {"mesh", cfg.mesh ? json(cfg.mesh->generic_string()) : json(nullptr)},
        {"specimen", to_string(cfg.specimen)},
        {"print",
         {{"line_width", p.line_width},
          {"layer_thickness", p.layer_thickness},
          {"wall_thickness", p.wall_thickness},
          {"wall_line_count", p.wall_line_count},
          {"nozzle_size", p.nozzle_size},
          {"infill_density", p.infill_density},
          {"printing_speed", p.printing_speed},
          {"wall_pattern", p.wall_pattern}}},
        {"pattern", to_string(p.infill_pattern)},
        {"direction", to_string(p.build_direction)},
        {"material", material_json(cfg.material)},
        {"force_max", cfg.force_max},
        {"steps", cfg.steps},
        {"section_model", to_string(cfg.section)},
        {"membership", to_string(cfg.membership)},
        {"layer_plane", to_string(cfg.plane)},
        {"swap_moduli", cfg.swap_moduli},
        {"skip_zero_layers", cfg.skip_zero_layers},
    };
}

std::string config_hash(const RunConfig &cfg)
{
    return fnv1a(inputs_json(cfg).dump());
}

TriangleMesh load_run_mesh(const RunConfig &cfg)
{
    if (cfg.mesh && cfg.specimen != Specimen::None)
        throw ConfigError("give either a mesh file or a built-in specimen, not both");
    switch (cfg.specimen) {
    case Specimen::Cylinder: return specimen_cylinder();
    case Specimen::Box: {
        // Square section as wide as the cylinder's diameter.
        const double h = kSpecimenRadius;
        return make_box({-h, -h, 0.}, {h, h, kSpecimenHeight});
    }
    case Specimen::None: break;
    }
    if (!cfg.mesh)
        throw ConfigError("no geometry: pass --mesh FILE or --specimen cylinder|box");
    if (!fs::exists(*cfg.mesh))
        throw ConfigError("mesh file '" + cfg.mesh->string() + "' does not exist");
    return load_mesh(*cfg.mesh);
}

Prediction predict(const RunConfig &cfg, const TriangleMesh &mesh)
{
    Prediction out;
    out.warnings = validate(cfg);

    ProfileOptions opt;
    opt.plane            = cfg.plane;
    opt.section          = cfg.section;
    opt.membership       = cfg.membership;
    opt.skip_zero_layers = cfg.skip_zero_layers;
    opt.threads          = cfg.threads;
    out.profile          = area_profile(mesh, cfg.print, opt);
    for (int layer : out.profile.skipped_layers)
        out.warnings.push_back("layer " + std::to_string(layer) + " has no material and was skipped");

    const BuildDirection dir = cfg.print.build_direction;
    const double         e   = select_modulus(dir, cfg.material, cfg.swap_moduli);
    const double         tol = select_modulus_tolerance(dir, cfg.material, cfg.swap_moduli);
    out.result               = force_displacement_curve(out.profile, e, linear_load(cfg.force_max, cfg.steps), tol);
    out.result.config_hash   = config_hash(cfg);
    return out;
}

Prediction predict(const RunConfig &cfg)
{
    validate(cfg);
    return predict(cfg, load_run_mesh(cfg));
}

std::string summary_json(const RunConfig &cfg, const Prediction &p)
{
    const AreaProfile      &prof = p.profile;
    const PredictionResult &r    = p.result;
    json                    doc{
        {"inputs", inputs_json(cfg)},
        {"config_hash", r.config_hash},
        {"layers", prof.entries.size()},
        {"layer_thickness_mm", prof.layer_thickness},
        {"length_mm", prof.length},
        {"part_height_mm", prof.part_height},
        {"residual_mm", prof.residual},
        {"nominal_area_mm2", prof.nominal_area},
        {"modulus_MPa", r.modulus},
        {"compliance_integral_per_mm", r.compliance_integral},
        {"E_effective_MPa", r.e_effective},
        {"E_band_MPa", {r.e_band_low, r.e_band_high}},
        {"skipped_layers", prof.skipped_layers},
        {"warnings", p.warnings},
        {"files", {{"curve", "curve.csv"}, {"profile", "profile.csv"}, {"layers", "layers.csv"}}},
    };
    return doc.dump(2) + "\n";
}

std::string curve_csv(const PredictionResult &r)
{
    std::string s = "force_N,displacement_mm,stress_MPa,strain\n";
    for (const CurvePoint &c : r.curve)
        s += num(c.force) + ',' + num(c.displacement) + ',' + num(c.stress) + ',' + num(c.strain) + '\n';
    return s;
}

std::string profile_csv(const AreaProfile &profile)
{
    std::string s = "layer_index,z_mm,area_mm2\n";
    for (const AreaEntry &e : profile.entries)
        s += std::to_string(e.layer_index) + ',' + num(e.z) + ',' + num(e.area) + '\n';
    return s;
}

std::string layers_csv(const AreaProfile &profile)
{
    std::string s;
    if (profile.direction == BuildDirection::Z) {
        s = "layer_index,pattern,wall_length_mm,infill_length_mm,d_path_mm,area_mm2,uncovered_mm2\n";
        for (const LayerRecord &l : profile.layers)
            s += std::to_string(l.layer_index) + ',' + std::string(to_string(profile.pattern)) + ',' +
                 num(l.wall_length) + ',' + num(l.infill_length) + ',' + num(l.d_path) + ',' + num(l.area) + ',' +
                 num(l.uncovered_area) + '\n';
    } else {
        s = "layer_index,n_cross,section_area_mm2,area_mm2\n";
        for (const LayerRecord &l : profile.layers)
            s += std::to_string(l.layer_index) + ',' + std::to_string(l.n_cross) + ',' + num(l.section_area) + ',' +
                 num(l.area) + '\n';
    }
    return s;
}

std::string contour_csv(const std::vector<LayerContour> &contours, const std::vector<int> &layer_indices)
{
    std::string s = "layer_index,z_mm,area_mm2,perimeter_mm\n";
    for (size_t i = 0; i < contours.size(); ++i)
        s += std::to_string(layer_indices[i]) + ',' + num(contours[i].z) + ',' + num(contours[i].area) + ',' +
             num(contours[i].perimeter) + '\n';
    return s;
}

void write_atomic(const fs::path &path, std::string_view content)
{
    if (path.has_parent_path())
        fs::create_directories(path.parent_path());
    fs::path tmp = path;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out)
            throw Error("cannot write '" + tmp.string() + "'");
        out.write(content.data(), std::streamsize(content.size()));
        if (!out)
            throw Error("cannot write '" + tmp.string() + "'");
    }
    fs::rename(tmp, path);
}

int guarded(const std::function<void()> &fn, std::ostream &err)
{
    try {
        fn();
        return kOk;
    } catch (const ZeroAreaLayer &e) {
        err << "error: " << e.what() << " (use --skip-zero-layers to skip it)\n";
        return kZeroArea;
    } catch (const ZeroArea &e) {
        err << "error: " << e.what() << '\n';
        return kZeroArea;
    } catch (const ConfigError &e) {
        err << "config error: " << e.what() << '\n';
        return kConfigError;
    } catch (const GeometryError &e) {
        err << "geometry error: " << e.what() << '\n';
        return kGeometry;
    } catch (const std::exception &e) {
        err << "error: " << e.what() << '\n';
        return kFailure;
    }
}

int cmd_predict(const RunConfig &cfg, std::ostream &out, std::ostream &err)
{
    return guarded(
        [&] {
            const Prediction p = predict(cfg);
            for (const std::string &w : p.warnings)
                err << "warning: " << w << '\n';
            write_atomic(cfg.out_dir / "summary.json", summary_json(cfg, p));
            write_atomic(cfg.out_dir / "curve.csv", curve_csv(p.result));
            write_atomic(cfg.out_dir / "profile.csv", profile_csv(p.profile));
            write_atomic(cfg.out_dir / "layers.csv", layers_csv(p.profile));
            out << "E_effective " << fixed(p.result.e_effective, 1) << " MPa (band " << fixed(p.result.e_band_low, 1)
                << " .. " << fixed(p.result.e_band_high, 1) << "), " << p.profile.entries.size() << " layers, "
                << "results in " << cfg.out_dir.string() << '\n';
        },
        err);
}

int cmd_curve(const RunConfig &cfg, std::ostream &out, std::ostream &err)
{
    return guarded(
        [&] {
            const Prediction  p   = predict(cfg);
            const std::string csv = curve_csv(p.result);
            write_atomic(cfg.out_dir / "curve.csv", csv);
            out << csv;
        },
        err);
}

int cmd_slice(const RunConfig &cfg, std::optional<double> z, std::ostream &out, std::ostream &err)
{
    return guarded(
        [&] {
            const TriangleMesh        mesh = load_run_mesh(cfg);
            std::vector<LayerContour> contours;
            std::vector<int>          index;
            if (z) {
                contours.push_back(slice_at(mesh, *z));
                index.push_back(0);
            } else {
                SliceOptions opt;
                opt.plane           = cfg.plane;
                opt.threads         = cfg.threads;
                const SliceStack st = slice_stack(mesh, cfg.print.layer_thickness, opt);
                contours            = st.contours;
                for (size_t i = 0; i < contours.size(); ++i)
                    index.push_back(int(i));
                if (st.residual > kGeomEps)
                    err << "note: " << fixed(st.residual, 6) << " mm above the last full layer is not sliced\n";
            }
            const std::string csv = contour_csv(contours, index);
            write_atomic(cfg.out_dir / "contours.csv", csv);
            out << csv;
        },
        err);
}

std::vector<CompareJob> default_compare_jobs()
{
    std::vector<CompareJob> jobs;
    for (const ModulusRow &r : reference_tables().predicted_z)
        jobs.push_back({r.direction, r.pattern});
    for (const ModulusRow &r : reference_tables().predicted_xy)
        jobs.push_back({r.direction, r.pattern});
    return jobs;
}

namespace {

const ModulusRow &reference_row(BuildDirection dir, InfillPattern pattern)
{
    const ReferenceTables &t = reference_tables();
    if (dir == BuildDirection::Z) {
        // Both line patterns share one row for Z-printed specimens.
        if (pattern == InfillPattern::Lines45_neg45)
            pattern = InfillPattern::Lines0_90;
        for (const ModulusRow &r : t.predicted_z)
            if (r.pattern == pattern)
                return r;
    } else {
        for (const ModulusRow &r : t.predicted_xy)
            if (r.pattern == pattern)
                return r;
    }
    throw ConfigError("no reference row for this job");
}

int decimals(std::string_view s)
{
    const size_t dot = s.find('.');
    return dot == std::string_view::npos ? 0 : int(s.size() - dot - 1);
}

// Values printed with more or fewer decimals than the rest of their column.
std::vector<std::string> precision_flags(std::string_view table, const auto &rows)
{
    std::vector<std::string> flags;
    auto check = [&](std::string_view column, auto member) {
        std::map<int, int> count;
        for (const DisplacementRow &r : rows)
            ++count[decimals(r.*member)];
        const int usual = std::max_element(count.begin(), count.end(), [](auto &a, auto &b) {
                              return a.second < b.second;
                          })->first;
        for (const DisplacementRow &r : rows)
            if (decimals(r.*member) != usual)
                flags.push_back(std::string(table) + " " + std::string(r.label) + " " + std::string(column) + " " +
                                std::string(r.*member) + ": printed with " + std::to_string(decimals(r.*member)) +
                                " decimals, column uses " + std::to_string(usual));
    };
    check("experimental", &DisplacementRow::experimental);
    check("predictive", &DisplacementRow::predictive);
    check("numerical", &DisplacementRow::numerical);
    check("error_predictive", &DisplacementRow::error_predictive);
    check("error_numerical", &DisplacementRow::error_numerical);
    return flags;
}

void case_study_text(std::ostringstream &s, std::string_view title, const auto &rows)
{
    s << title << " [geometry unavailable]\n";
    s << "  pattern                 exp_mm   pred_mm  num_mm   err_pred%  err_num%\n";
    for (const DisplacementRow &r : rows) {
        char line[160];
        std::snprintf(line, sizeof line, "  %-22s  %-7s  %-7s  %-7s  %-9s  %s\n", std::string(r.label).c_str(),
                      std::string(r.experimental).c_str(), std::string(r.predictive).c_str(),
                      std::string(r.numerical).c_str(), std::string(r.error_predictive).c_str(),
                      std::string(r.error_numerical).c_str());
        s << line;
    }
}

json case_study_json(const auto &rows)
{
    json out = json::array();
    for (const DisplacementRow &r : rows)
        out.push_back({{"pattern", r.label},
                       {"experimental_mm", r.experimental},
                       {"predictive_mm", r.predictive},
                       {"numerical_mm", r.numerical},
                       {"error_predictive_pct", r.error_predictive},
                       {"error_numerical_pct", r.error_numerical}});
    return out;
}

} // namespace

CompareReport compare(const RunConfig &cfg, const std::vector<CompareJob> &jobs)
{
    CompareReport report;
    report.reference_digest = reference_digest(reference_tables());
    if (jobs.empty())
        return report;
    validate(cfg);
    const TriangleMesh mesh = load_run_mesh(cfg);
    for (const CompareJob &job : jobs) {
        RunConfig run                = cfg;
        run.print.build_direction    = job.direction;
        run.print.infill_pattern     = job.pattern;
        const Prediction  p          = predict(run, mesh);
        const ModulusRow &ref        = reference_row(job.direction, job.pattern);
        CompareRow        row;
        row.label                    = std::string(ref.label);
        row.direction                = job.direction;
        row.pattern                  = job.pattern;
        row.predicted                = p.result.e_effective;
        row.experimental             = ref.experimental;
        row.error                    = relative_error(row.predicted, ref.experimental);
        row.reference_predicted          = ref.predicted;
        row.reference_error              = ref.printed_error;
        row.reference_error_recomputed   = relative_error(ref.predicted, ref.experimental);
        row.reference_error_flagged      = std::abs(row.reference_error_recomputed - ref.printed_error) > kPrintedErrorSlack;
        report.rows.push_back(row);
    }
    return report;
}

std::string compare_text(const CompareReport &report)
{
    std::ostringstream s;
    s << "Effective compressive modulus, predicted vs reference\n";
    s << "  dir  pattern                  predicted  experimental  error%   ref_pred  ref_err%  ref_err%(recomputed)\n";
    for (const CompareRow &r : report.rows) {
        char line[200];
        std::snprintf(line, sizeof line, "  %-3s  %-22s  %9.1f  %12.1f  %6.2f  %9.1f  %8.2f  %8.2f%s\n",
                      std::string(to_string(r.direction)).c_str(), r.label.c_str(), r.predicted, r.experimental,
                      r.error, r.reference_predicted, r.reference_error, r.reference_error_recomputed,
                      r.reference_error_flagged ? "  FLAG printed error disagrees" : "");
        s << line;
    }
    if (report.rows.empty())
        s << "  (no runs)\n";
    const ReferenceTables &t = reference_tables();
    s << "\nCase study nominal displacement at " << fixed(t.case_study_force, 0) << " N, reference values only\n";
    case_study_text(s, "Z-printed", t.case_study_z);
    case_study_text(s, "XY-printed", t.case_study_xy);
    for (const std::string &f : precision_flags("Z-printed", t.case_study_z))
        s << "FLAG " << f << '\n';
    for (const std::string &f : precision_flags("XY-printed", t.case_study_xy))
        s << "FLAG " << f << '\n';
    s << "\nreference digest " << report.reference_digest << '\n';
    return s.str();
}

std::string compare_json(const CompareReport &report)
{
    json rows = json::array();
    for (const CompareRow &r : report.rows)
        rows.push_back({{"direction", to_string(r.direction)},
                        {"pattern", to_string(r.pattern)},
                        {"label", r.label},
                        {"E_predicted_MPa", r.predicted},
                        {"E_experimental_MPa", r.experimental},
                        {"error_pct", r.error},
                        {"reference_predicted_MPa", r.reference_predicted},
                        {"reference_error_printed_pct", r.reference_error},
                        {"reference_error_recomputed_pct", r.reference_error_recomputed},
                        {"reference_error_flagged", r.reference_error_flagged}});
    const ReferenceTables &t     = reference_tables();
    json                   flags = json::array();
    for (const std::string &f : precision_flags("Z-printed", t.case_study_z))
        flags.push_back(f);
    for (const std::string &f : precision_flags("XY-printed", t.case_study_xy))
        flags.push_back(f);
    json doc{
        {"rows", rows},
        {"case_study",
         {{"status", "geometry unavailable"},
          {"force_N", t.case_study_force},
          {"z", case_study_json(t.case_study_z)},
          {"xy", case_study_json(t.case_study_xy)},
          {"flags", flags}}},
        {"reference_digest", report.reference_digest},
    };
    return doc.dump(2) + "\n";
}

int cmd_compare(const RunConfig &cfg, const std::vector<CompareJob> &jobs, std::ostream &out, std::ostream &err)
{
    return guarded(
        [&] {
            const std::string before = reference_digest(reference_tables());
            const CompareReport r    = compare(cfg, jobs);
            if (reference_digest(reference_tables()) != before)
                throw Error("reference tables changed during the report");
            const std::string text = compare_text(r);
            write_atomic(cfg.out_dir / "compare.txt", text);
            write_atomic(cfg.out_dir / "compare.json", compare_json(r));
            out << text;
        },
        err);
}

} // namespace printstiff::app
