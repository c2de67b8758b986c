#include "printstiff/app.hpp"
#include "printstiff/errors.hpp"

#include <CLI11.hpp>

#include <iostream>

using namespace printstiff;
using namespace printstiff::app;

namespace {

// Flags shared by every subcommand. Values are applied over the config file
// only when given on the command line.
struct Overrides
{
    std::string         config;
    std::string         mesh;
    std::string         specimen;
    std::string         pattern;
    std::string         direction;
    std::string         material;
    std::string         out_dir;
    std::string         section_model;
    std::string         membership;
    std::string         layer_plane;
    bool                swap_moduli      = false;
    bool                skip_zero_layers = false;
    double              force_max        = 0.;
    int                 steps            = 0;
    unsigned            threads          = 0;
    double              line_width       = 0.;
    double              layer_thickness  = 0.;
    int                 wall_line_count  = -1;
};

void add_common(CLI::App *cmd, Overrides &o)
{
    cmd->add_option("--config", o.config, "JSON run configuration");
    cmd->add_option("--mesh", o.mesh, "STL file of the part");
    cmd->add_option("--specimen", o.specimen, "built-in specimen: cylinder | box");
    cmd->add_option("--pattern", o.pattern, "Concentric | ZigZag | Lines0_90 | Lines45_neg45");
    cmd->add_option("--direction", o.direction, "build direction: Z | XY");
    cmd->add_option("--material", o.material, "material preset (PETG)");
    cmd->add_option("--out-dir", o.out_dir, "output directory");
    cmd->add_option("--section-model", o.section_model, "filament section: disc_square | stadium");
    cmd->add_option("--membership", o.membership, "filament membership: center | footprint");
    cmd->add_option("--layer-plane", o.layer_plane, "slice plane inside each layer: mid | bottom");
    cmd->add_flag("--swap-moduli", o.swap_moduli, "exchange the Z and XY moduli");
    cmd->add_flag("--skip-zero-layers", o.skip_zero_layers, "skip layers without material instead of failing");
    cmd->add_option("--force-max", o.force_max, "largest compressive force (N)");
    cmd->add_option("--steps", o.steps, "number of force steps");
    cmd->add_option("--threads", o.threads, "worker threads");
    cmd->add_option("--line-width", o.line_width, "line width (mm)");
    cmd->add_option("--layer-thickness", o.layer_thickness, "layer thickness (mm)");
    cmd->add_option("--wall-line-count", o.wall_line_count, "wall line count");
}

RunConfig build_config(const Overrides &o)
{
    RunConfig cfg = o.config.empty() ? RunConfig{} : load_run_config(o.config);
    if (!o.mesh.empty()) {
        cfg.mesh     = o.mesh;
        cfg.specimen = Specimen::None;
    }
    if (!o.specimen.empty()) {
        cfg.specimen = parse_specimen(o.specimen);
        cfg.mesh.reset();
    }
    if (!o.pattern.empty())
        cfg.print.infill_pattern = parse_pattern(o.pattern);
    if (!o.direction.empty())
        cfg.print.build_direction = parse_direction(o.direction);
    if (!o.material.empty())
        cfg.material = material_preset(o.material);
    if (!o.out_dir.empty())
        cfg.out_dir = o.out_dir;
    if (!o.section_model.empty())
        cfg.section = parse_section_model(o.section_model);
    if (!o.membership.empty())
        cfg.membership = parse_membership(o.membership);
    if (!o.layer_plane.empty())
        cfg.plane = parse_layer_plane(o.layer_plane);
    if (o.swap_moduli)
        cfg.swap_moduli = true;
    if (o.skip_zero_layers)
        cfg.skip_zero_layers = true;
    if (o.force_max != 0.)
        cfg.force_max = o.force_max;
    if (o.steps != 0)
        cfg.steps = o.steps;
    if (o.threads != 0)
        cfg.threads = o.threads;
    if (o.line_width != 0.)
        cfg.print.line_width = o.line_width;
    if (o.layer_thickness != 0.)
        cfg.print.layer_thickness = o.layer_thickness;
    if (o.wall_line_count >= 0)
        cfg.print.wall_line_count = o.wall_line_count;
    return cfg;
}

std::vector<CompareJob> parse_jobs(const std::vector<std::string> &tokens)
{
    std::vector<CompareJob> jobs;
    for (const std::string &t : tokens) {
        if (t == "none")
            continue;
        const size_t colon = t.find(':');
        if (colon == std::string::npos)
            throw ConfigError("compare job '" + t + "' must look like DIRECTION:PATTERN");
        jobs.push_back({parse_direction(t.substr(0, colon)), parse_pattern(t.substr(colon + 1))});
    }
    return jobs;
}

} // namespace

int main(int argc, char **argv)
{
    CLI::App cli{"Compressive stiffness of extrusion-printed parts from slicing and toolpath geometry"};
    cli.require_subcommand(1);

    Overrides predict_o, curve_o, slice_o, compare_o;
    CLI::App *predict = cli.add_subcommand("predict", "effective modulus and force-displacement curve");
    add_common(predict, predict_o);
    CLI::App *curve = cli.add_subcommand("curve", "force-displacement curve as CSV");
    add_common(curve, curve_o);
    CLI::App *slice = cli.add_subcommand("slice", "contour areas and perimeters");
    add_common(slice, slice_o);
    double z = 0.;
    bool   all = false;
    auto  *z_opt   = slice->add_option("--z", z, "single plane height (mm)");
    auto  *all_opt = slice->add_flag("--all", all, "every layer of the stack (default)");
    z_opt->excludes(all_opt);
    CLI::App *cmp = cli.add_subcommand("compare", "all pattern and direction runs against the reference data");
    add_common(cmp, compare_o);
    std::vector<std::string> job_tokens;
    cmp->add_option("--jobs", job_tokens, "DIRECTION:PATTERN list, or 'none'; default: all reference rows");

    try {
        cli.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        const int code = cli.exit(e);
        return code == 0 ? 0 : int(kConfigError);
    }

    RunConfig cfg;
    const Overrides &o = predict->parsed() ? predict_o
                       : curve->parsed()   ? curve_o
                       : slice->parsed()   ? slice_o
                                           : compare_o;
    std::vector<CompareJob> jobs;
    const int setup = guarded(
        [&] {
            cfg = build_config(o);
            if (cmp->parsed())
                jobs = job_tokens.empty() ? default_compare_jobs() : parse_jobs(job_tokens);
        },
        std::cerr);
    if (setup != kOk)
        return setup;

    if (predict->parsed())
        return cmd_predict(cfg, std::cout, std::cerr);
    if (curve->parsed())
        return cmd_curve(cfg, std::cout, std::cerr);
    if (slice->parsed())
        return cmd_slice(cfg, z_opt->count() ? std::optional<double>(z) : std::nullopt, std::cout, std::cerr);
    return cmd_compare(cfg, jobs, std::cout, std::cerr);
}
