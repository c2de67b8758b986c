#include "printstiff/reference.hpp"

#include <cmath>
#include <cstdint>
#include <cstdio>

namespace printstiff {

const ReferenceTables &reference_tables()
{
    static const ReferenceTables tables{
        petg_preset(),
        {{
            {"Concentric", 1018.0, 16.2, 315.2, 20.67, 0.94, 1.07, 33.53, 0.76, 0.70},
            {"Zig-Zag", 1141.4, 25.1, 632.2, 26.06, 1.36, 1.86, 39.02, 1.26, 1.57},
            {"Lines 0/90 & 45/-45", 1030.0, 18.7, 468.2, 11.64, 1.67, 2.80, 27.15, 0.76, 0.58},
        }},
        {{
            {"Concentric", 1333.2, 21.5, 577.5, 29.16, 2.79, 9.71, 43.24, 2.32, 6.71},
            {"Zig-Zag", 1273.9, 13.7, 234.9, 22.41, 1.18, 1.73, 34.51, 0.72, 0.64},
            {"Lines 0/90", 1326.5, 16.2, 380.2, 27.28, 1.00, 0.95, 36.24, 0.76, 0.83},
            {"Lines 45/-45", 1252.7, 14.7, 231.6, 33.83, 1.17, 1.72, 40.05, 0.44, 0.24},
        }},
        {{
            {"Concentric", BuildDirection::Z, InfillPattern::Concentric, 1068.9, 1018.0, 4.99},
            {"Zig-Zag", BuildDirection::Z, InfillPattern::ZigZag, 1080.7, 1141.4, 5.32},
            {"Lines 0/90 & 45/-45", BuildDirection::Z, InfillPattern::Lines0_90, 1090.5, 1030.0, 5.87},
        }},
        {{
            {"Concentric", BuildDirection::XY, InfillPattern::Concentric, 1298.3, 1333.2, 4.82},
            {"Zig-Zag", BuildDirection::XY, InfillPattern::ZigZag, 1212.5, 1273.9, 2.62},
            {"Lines 0/90", BuildDirection::XY, InfillPattern::Lines0_90, 1291.1, 1326.5, 2.67},
            {"Lines 45/-45", BuildDirection::XY, InfillPattern::Lines45_neg45, 1203.3, 1252.7, 3.94},
        }},
        {{
            {"Concentric", "0.2634", "0.2640", "0.2732", "0.228", "3.717"},
            {"Zig-Zag", "0.2747", "0.2867", "0.2437", "4.368", "11.303"},
            {"Lines 0/90 & 45/-45", "0.2934", "0.2834", "0.2700", "3.408", "7.972"},
        }},
        {{
            {"Concentric", "0.2110", "0.2098", "0.2086", "0.569", "1.137"},
            {"Zig-Zag", "0.2270", "0.2309", "0.2183", "1.718", "3.8282"},
            {"Lines 0/90", "0.1966", "0.2033", "0.2097", "3.408", "6.638"},
            {"Lines 45/-45", "0.1955", "0.1922", "0.2220", "1.688", "13.555"},
        }},
        600.,
    };
    return tables;
}

namespace {

struct Fnv
{
    std::uint64_t h = 1469598103934665603ull;
    void          add(std::string_view s)
    {
        for (unsigned char c : s) {
            h ^= c;
            h *= 1099511628211ull;
        }
        h ^= 0x1f;
        h *= 1099511628211ull;
    }
    void add(double v)
    {
        char buf[32];
        std::snprintf(buf, sizeof buf, "%.17g", v);
        add(std::string_view(buf));
    }
};

} // namespace

std::string reference_digest(const ReferenceTables &t)
{
    Fnv f;
    const FilamentProps &p = t.filament;
    f.add(p.name);
    for (double v : {p.e_cross, p.e_cross_tol, p.e_longitudinal, p.e_longitudinal_tol, p.poisson_ratio, p.density,
                     p.filament_diameter, p.glass_transition, p.softening})
        f.add(v);
    f.add(p.printing_temperature);
    f.add(p.bed_temperature);
    auto columns = [&](const auto &cols) {
        for (const ExperimentalColumn &c : cols) {
            f.add(c.label);
            for (double v : {c.modulus, c.modulus_std, c.modulus_var, c.yield, c.yield_std, c.yield_var, c.ultimate,
                             c.ultimate_std, c.ultimate_var})
                f.add(v);
        }
    };
    columns(t.experimental_z);
    columns(t.experimental_xy);
    auto moduli = [&](const auto &rows) {
        for (const ModulusRow &r : rows) {
            f.add(r.label);
            f.add(to_string(r.direction));
            f.add(to_string(r.pattern));
            for (double v : {r.predicted, r.experimental, r.printed_error})
                f.add(v);
        }
    };
    moduli(t.predicted_z);
    moduli(t.predicted_xy);
    auto displacements = [&](const auto &rows) {
        for (const DisplacementRow &r : rows)
            for (std::string_view s : {r.label, r.experimental, r.predictive, r.numerical, r.error_predictive,
                                       r.error_numerical})
                f.add(s);
    };
    displacements(t.case_study_z);
    displacements(t.case_study_xy);
    f.add(t.case_study_force);

    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(f.h));
    return buf;
}

double relative_error(double value, double reference)
{
    return std::abs(value - reference) / reference * 100.;
}

} // namespace printstiff
