#pragma once

#include <string>
#include <utility>
#include <vector>

#include "machzero/field.hpp"
#include "machzero/fronttracker.hpp"
#include "machzero/scenario.hpp"
#include "machzero/trajectory.hpp"

namespace machzero {

/// Piecewise-linear velocity of the rigid liquid slab.
struct PistonPath {
    std::vector<double> t;
    std::vector<double> v;

    /// Linear interpolation. Throws OutOfRange outside [t.front(), t.back()].
    double at(double time) const;
};

/// Gas + rigid piston solution.
struct LimitTrajectory {
    Trajectory left_gas;
    Trajectory right_gas;
    PistonPath piston;
    std::vector<double> p_left;  // p(0-) at the piston knots, before each update
    std::vector<double> p_right; // p(m+) at the piston knots, before each update
    double m = 1.0;
    std::size_t events = 0;
    /// (1/m) sup |p(0-) - p(m+)| over the knots.
    double lipschitz_bound = 0.0;
};

/// Front tracking in the two gas half-lines closed by a piston of mass m,
/// whose velocity is advanced by explicit Euler every `dt_piston`. The initial
/// velocity must be constant on the liquid; it is the piston's initial velocity.
LimitTrajectory run_limit_model(const Scenario& s, double dt_piston, RunOptions options = {});

/// Time window [a, b].
using Window = std::pair<double, double>;

/// Mean over [a, b] of a time series (breaks are times) for p or v.
double window_mean(const Field& series, double a, double b, double State::*component);

/// For each window, the L1-in-z distance between the time average of p(., z)
/// and the time average of (1 - z/m) p(., 0-) + (z/m) p(., m+), using the given
/// boundary pressure series. The z grid is used as a midpoint rule on ]0, m[.
std::vector<double> weakstar_pressure_error(const Trajectory& traj, const std::vector<Window>& windows,
                                            const std::vector<double>& z_grid, const Field& left_trace,
                                            const Field& right_trace, double m);

/// Lagrangian-to-Eulerian interface positions.
struct InterfacePaths {
    std::vector<double> t;
    std::vector<double> a;
    std::vector<double> b;
};

/// a(t) = a_o + int v(., 0), b(t) = b_o + int v(., m) from the traces of a
/// two-phase trajectory, sampled at every trace break. Throws MissingTrace for
/// an empty trajectory.
InterfacePaths eulerian_interfaces(const Trajectory& traj, double m, double a_o, double b_o);
/// Rigid-slab version: both interfaces move with the piston.
InterfacePaths limit_interfaces(const PistonPath& piston, double a_o, double b_o);
/// int_0^m tau_kappa of the initial pressure.
double liquid_volume(const Scenario& s);

struct SweepOptions {
    double dt_piston = 0.0; // 0 means 1e-3 * t_end
    int windows = 4;
    int z_points = 10;
    int lipschitz_samples = 40;
    bool parallel = true;
    RunOptions run;
};

/// Measurements of one kappa run. Liquid TV values exclude the strips.
struct KappaRecord {
    double kappa = 0.0;
    std::size_t events = 0;
    double tv_v = 0.0;        // sup_t TV(v; L)
    double tv_tau = 0.0;      // sup_t TV(tau; L)
    double tv_p = 0.0;        // sup_t TV(p; L)
    double tau_deviation = 0.0; // sup |tau - tau_bar| on the liquid
    double piston_error = 0.0;  // max_t |v(t, m/2) - v_l(t)|
    double interface_error = 0.0; // max_t |a(t) - a_limit(t)| + |b(t) - b_limit(t)|
    double lipschitz_v = 0.0;   // max over samples of int_L |dv| / dt
    double lipschitz_p = 0.0;   // same for p, times kappa
    std::vector<double> weakstar; // one per window
};

struct Verdict {
    std::string name;
    bool passed = false;
    std::string detail;
};

struct SweepReport {
    std::vector<KappaRecord> records;
    std::vector<Window> windows;
    LimitTrajectory limit;
    double tv_p_cap = 0.0;
    /// Empty for a single kappa.
    std::vector<Verdict> verdicts;
    bool passed() const noexcept;
};

/// Runs the scenario for each kappa (strictly decreasing) and the piston model,
/// then compares. Throws ValidationError on a bad kappa list.
SweepReport kappa_sweep(const Scenario& s, const std::vector<double>& kappas, const SweepOptions& options = {});

/// Measurements of a finished two-phase run against a limit solution.
KappaRecord measure(const Scenario& s, const RunResult& run, const LimitTrajectory& limit,
                    const std::vector<Window>& windows, const SweepOptions& options);

} // namespace machzero
