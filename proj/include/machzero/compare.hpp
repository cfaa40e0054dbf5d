#pragma once

#include <cstddef>

#include "machzero/field.hpp"
#include "machzero/fronttracker.hpp"
#include "machzero/scenario.hpp"

namespace machzero {

/// Front tracking against first-order Godunov at t_end.
struct GodunovComparison {
    int cells = 0;     // fine grid; the coarse grid has half as many
    double z_lo = 0.0; // L1 window
    double z_hi = 0.0;
    double l1_distance = 0.0; // front tracking vs fine grid, p and v summed
    double self_gap = 0.0;    // coarse vs fine grid
    int steps = 0;            // fine-grid time steps
    bool passed() const noexcept { return l1_distance <= 2.0 * self_gap; }
};

GodunovComparison compare_godunov(const Scenario& s, const RunResult& run, int cells, double cfl = 0.45);

/// Integral of v over [a, b].
double velocity_integral(const Field& f, double a, double b);

/// Drift of the velocity integral between t = 0 and t_end at two values of eps.
struct ConservationCheck {
    double eps_coarse = 0.0;
    double eps_fine = 0.0;
    double drift_coarse = 0.0;
    double drift_fine = 0.0;
    std::size_t events_coarse = 0;
    std::size_t events_fine = 0;
    double ratio() const noexcept { return drift_coarse / drift_fine; }
    bool passed() const noexcept { return ratio() >= 1.5 && ratio() <= 3.0; }
};

ConservationCheck conservation_check(Scenario s, double eps_coarse, double eps_fine);

} // namespace machzero
