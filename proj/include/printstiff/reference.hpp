#pragma once

#include "printstiff/print_config.hpp"
#include "printstiff/stiffness.hpp"

#include <array>
#include <string>
#include <string_view>

namespace printstiff {

// Published compression results for the PETG specimens, kept read-only so
// reports can be checked against them.

struct ExperimentalColumn
{
    std::string_view label;
    double           modulus, modulus_std, modulus_var;
    double           yield, yield_std, yield_var;
    double           ultimate, ultimate_std, ultimate_var;
};

struct ModulusRow
{
    std::string_view label;
    BuildDirection   direction;
    InfillPattern    pattern; // pattern run for this row
    double           predicted;
    double           experimental;
    double           printed_error; // percent, as printed
};

// Values kept as printed text; the precision itself is part of the record.
struct DisplacementRow
{
    std::string_view label;
    std::string_view experimental;
    std::string_view predictive;
    std::string_view numerical;
    std::string_view error_predictive;
    std::string_view error_numerical;
};

struct ReferenceTables
{
    FilamentProps                     filament;
    std::array<ExperimentalColumn, 3> experimental_z;
    std::array<ExperimentalColumn, 4> experimental_xy;
    std::array<ModulusRow, 3>         predicted_z;
    std::array<ModulusRow, 4>         predicted_xy;
    std::array<DisplacementRow, 3>    case_study_z;
    std::array<DisplacementRow, 4>    case_study_xy;
    double                            case_study_force = 600.; // N
};

const ReferenceTables &reference_tables();

// FNV-1a over a canonical text dump of every stored value.
std::string reference_digest(const ReferenceTables &tables);

// |a - b| / b * 100
double relative_error(double value, double reference);

} // namespace printstiff
