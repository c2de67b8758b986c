#include "printstiff/print_config.hpp"

#include "printstiff/errors.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>

namespace printstiff {

std::vector<std::string> validate(const PrintConfig &cfg)
{
    if (!(cfg.line_width > 0.) || !std::isfinite(cfg.line_width))
        throw ConfigError("line width must be positive");
    if (!(cfg.layer_thickness > 0.) || !std::isfinite(cfg.layer_thickness))
        throw ConfigError("layer thickness must be positive");
    if (cfg.wall_line_count < 0)
        throw ConfigError("wall line count must be non-negative");
    if (cfg.infill_density != 100.)
        throw ConfigError("only 100 % infill density is supported (got " + std::to_string(cfg.infill_density) + ")");

    std::vector<std::string> warnings;
    if (cfg.layer_thickness > cfg.nozzle_size)
        warnings.push_back("layer thickness exceeds nozzle size");
    if (cfg.line_width < 0.5 * cfg.nozzle_size || cfg.line_width > 1.5 * cfg.nozzle_size)
        warnings.push_back("line width is far from the nozzle size");
    if (std::abs(cfg.wall_thickness - cfg.wall_line_count * cfg.line_width) > 1e-9)
        warnings.push_back("wall thickness differs from wall line count x line width; wall line count governs");
    return warnings;
}

std::string_view to_string(BuildDirection d)
{
    return d == BuildDirection::Z ? "Z" : "XY";
}

std::string_view to_string(InfillPattern p)
{
    switch (p) {
    case InfillPattern::Concentric: return "Concentric";
    case InfillPattern::ZigZag: return "ZigZag";
    case InfillPattern::Lines0_90: return "Lines0_90";
    case InfillPattern::Lines45_neg45: return "Lines45_neg45";
    }
    return "?";
}

namespace {

std::string normalized(std::string_view s)
{
    std::string out;
    for (char c : s)
        if (std::isalnum(static_cast<unsigned char>(c)))
            out.push_back(char(std::tolower(static_cast<unsigned char>(c))));
    return out;
}

} // namespace

BuildDirection parse_direction(std::string_view s)
{
    const std::string n = normalized(s);
    if (n == "z")
        return BuildDirection::Z;
    if (n == "xy" || n == "x" || n == "y")
        return BuildDirection::XY;
    throw ConfigError("unknown build direction '" + std::string(s) + "' (expected Z or XY)");
}

InfillPattern parse_pattern(std::string_view s)
{
    const std::string n = normalized(s);
    if (n == "concentric")
        return InfillPattern::Concentric;
    if (n == "zigzag")
        return InfillPattern::ZigZag;
    if (n == "lines090" || n == "lines" || n == "lines0")
        return InfillPattern::Lines0_90;
    if (n == "lines45neg45" || n == "lines45" || n == "lines4545")
        return InfillPattern::Lines45_neg45;
    throw ConfigError("unknown infill pattern '" + std::string(s) +
                      "' (expected Concentric, ZigZag, Lines0_90 or Lines45_neg45)");
}

} // namespace printstiff
