#pragma once

#include <cstdint>
#include <vector>

#include "machzero/scenario.hpp"

namespace machzero {

/// Gas at rest with p = 1 everywhere, except for a left-gas stream of velocity
/// `u` that ramps down to rest over [-1.5, -0.5] through a cosine staircase of
/// `steps` constant states. Gamma = 1.4 gas, isothermal liquid base, T = 1.
Scenario standard_scenario(double kappa, double u = 0.05, int steps = 50);

/// Single expansion jump in the left gas (v = -u | 0 at z = -0.5), T = 1.
Scenario expansion_scenario(double kappa, double u = 0.05);

/// Head-on compression: v = u, 0, -u with jumps at -1 and 2, isothermal gas.
Scenario compression_scenario(double kappa, double u);

/// Seeded random small perturbations of the rest state (p = 1, v = 0), with one
/// or two jumps in each of the three regions. Liquid increments are scaled by
/// kappa for v and kappa^2 for p so the weighted size is kappa independent.
std::vector<Scenario> perturbed_scenarios(double kappa, int count, std::uint64_t seed,
                                          double amplitude = 2e-6);

} // namespace machzero
