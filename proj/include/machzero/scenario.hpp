#pragma once

#include <cstdint>
#include <vector>

#include "machzero/eos.hpp"
#include "machzero/field.hpp"

namespace machzero {

/// One run of the gas | liquid | gas problem in mass coordinate z.
/// The liquid occupies ]0, m[, the gas the rest of the line.
struct Scenario {
    double m = 1.0;
    double p_o = 1.0;
    GammaLaw gas{1.0, 1.0};
    GammaLaw liquid_base{1.0, 1.0};
    double p_bar = 1.0;
    double kappa = 0.1;
    Field initial = Field::constant({1.0, 0.0});
    double t_end = 1.0;
    double eps = 1e-3;
    double wtv_budget = 1.0;
    std::uint64_t seed = 20240611;
    std::vector<double> snapshot_times;
    std::vector<double> trace_points;

    LiquidEos liquid() const { return LiquidEos{liquid_base, p_bar, kappa}; }
    Medium gas_medium() const { return Medium{gas}; }
    Medium liquid_medium() const { return Medium{liquid()}; }
    Medium medium_at(double z) const { return (z > 0.0 && z < m) ? liquid_medium() : gas_medium(); }

    /// Throws ValidationError (with a field path) if the scenario is malformed:
    /// profile jumps inside [-2 eps^2, 2 eps^2] or [m - 2 eps^2, m + 2 eps^2],
    /// unsorted breakpoints, non-positive pressures, bad parameters.
    void validate() const;
};

} // namespace machzero
