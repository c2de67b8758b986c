#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace printstiff {

enum class BuildDirection { Z, XY };

enum class InfillPattern { Concentric, ZigZag, Lines0_90, Lines45_neg45 };

// Geometric and technological process parameters. Defaults are the PETG
// compression-specimen settings (0.30 mm lines, 0.15 mm layers, 2 walls).
struct PrintConfig
{
    double         line_width      = 0.30; // mm
    double         layer_thickness = 0.15; // mm
    double         wall_thickness  = 0.60; // mm
    int            wall_line_count = 2;
    double         nozzle_size     = 0.40; // mm
    double         infill_density  = 100.; // %
    double         printing_speed  = 48.;  // mm/s, metadata only
    std::string    wall_pattern    = "Concentric";
    InfillPattern  infill_pattern  = InfillPattern::Concentric;
    BuildDirection build_direction = BuildDirection::Z;
};

// Throws ConfigError on hard violations (non-positive widths, negative wall
// count, infill density other than 100 %). Returns human-readable warnings
// for values outside usual vendor practice.
std::vector<std::string> validate(const PrintConfig &cfg);

std::string_view to_string(BuildDirection d);
std::string_view to_string(InfillPattern p);
// Accepts the canonical names plus a few spellings ("zig-zag", "lines",
// "lines45", "x/y"). Throws ConfigError.
BuildDirection parse_direction(std::string_view s);
InfillPattern  parse_pattern(std::string_view s);

} // namespace printstiff
