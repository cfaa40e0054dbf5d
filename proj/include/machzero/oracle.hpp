#pragma once

#include <functional>

#include "machzero/eos.hpp"
#include "machzero/field.hpp"
#include "machzero/laxwaves.hpp"

namespace machzero {
struct Scenario;
}

namespace machzero::oracle {

/// Adaptive Gauss-Legendre quadrature (7-point panels, bisection on the
/// relative error estimate).
double integrate(const std::function<double(double)>& f, double a, double b, double rel_tol = 1e-12);

/// Lax curve evaluated branchwise from the integral / Hugoniot forms, with the
/// rarefaction integral done by quadrature. Independent of the kernel
/// representation used by lax_velocity.
double lax_velocity_direct(const Medium& m, WaveFamily fam, double p, const State& anchor);

/// Middle pressure of the Riemann problem between two media by plain
/// bisection on [p_lo, p_hi]; `scale` only rescales the residual. Throws
/// NoBracket without a sign change.
double riemann_bisect(const Medium& left_medium, const Medium& right_medium, const State& left,
                      const State& right, double tol = 1e-13, double p_lo = 1e-6, double p_hi = 1e3);

/// Wall pressure for a gas state next to a piston moving with wall_v, by
/// bisection. `gas_on_left` is true when the gas fills z < wall.
double piston_bisect(const GammaLaw& gas, const State& gas_state, double wall_v, bool gas_on_left,
                     double tol = 1e-13, double p_lo = 1e-6, double p_hi = 1e3);

struct L1Distance {
    double p = 0.0;
    double v = 0.0;
    double total() const noexcept { return p + v; }
};

/// Exact integral of |f1 - f2| over [a, b] by merging breakpoints.
L1Distance l1_distance(const Field& f1, const Field& f2, double a, double b);

struct GodunovResult {
    Field field;
    double dz = 0.0;
    int steps = 0;
    double mass_v0 = 0.0; // sum v dz at t = 0
    double mass_v = 0.0;  // sum v dz at t = T
    double boundary_flux_v = 0.0;
    double mass_tau0 = 0.0;
    double mass_tau = 0.0;
    double boundary_flux_tau = 0.0;
};

/// First-order Godunov scheme in equal-mass cells with z = 0 and z = m on
/// cell faces. `cells` is the total cell count over the computational window,
/// which covers the perturbation plus its light cone up to t_end.
GodunovResult godunov(const Scenario& s, int cells, double cfl, double t_end);

} // namespace machzero::oracle
