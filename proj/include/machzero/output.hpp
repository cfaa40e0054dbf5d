#pragma once

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "machzero/front.hpp"
#include "machzero/fronttracker.hpp"
#include "machzero/limits.hpp"
#include "machzero/scenario.hpp"
#include "machzero/trajectory.hpp"

namespace machzero {

/// Decimal with 17 significant digits.
std::string format_number(double x);

/// Lagrangian window holding the initial perturbation, the liquid and the gas
/// light cone up to t_end, with some margin.
std::pair<double, double> plot_window(const Scenario& s);

/// Piecewise-constant profiles as step polylines: every constant piece inside
/// [z_lo, z_hi] gives two rows, one at each end.
void write_snapshots(std::ostream& out, const Scenario& s, const Trajectory& traj, const std::vector<double>& times,
                     double z_lo, double z_hi);
/// Time series at fixed z, as step polylines over [0, t_end].
void write_traces(std::ostream& out, const Trajectory& traj, const std::vector<double>& points, double t_end);
/// One row per event. Wave lists are "family:sigma" items joined by ';'.
void write_events(std::ostream& out, const std::vector<EventRecord>& ledger);
void write_glimm(std::ostream& out, const std::vector<GlimmRow>& rows);
/// Long format: one row per (kappa, metric).
void write_sweep(std::ostream& out, const SweepReport& report);
/// Piston model: t, v_l, p(0-), p(m+), and the rigid interfaces a, b.
void write_piston(std::ostream& out, const LimitTrajectory& limit, double a_o, double b_o);

} // namespace machzero
