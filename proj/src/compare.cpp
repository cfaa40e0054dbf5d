#include "machzero/compare.hpp"

#include <algorithm>
#include <cmath>

#include "machzero/oracle.hpp"
#include "machzero/output.hpp"

namespace machzero {

GodunovComparison compare_godunov(const Scenario& s, const RunResult& run, int cells, double cfl)
{
    const oracle::GodunovResult fine = oracle::godunov(s, cells, cfl, s.t_end);
    const oracle::GodunovResult coarse = oracle::godunov(s, cells / 2, cfl, s.t_end);
    GodunovComparison out;
    out.cells = cells;
    out.steps = fine.steps;
    out.z_lo = std::min(fine.field.breaks.front(), coarse.field.breaks.front()) - coarse.dz;
    out.z_hi = std::max(fine.field.breaks.back(), coarse.field.breaks.back()) + coarse.dz;
    const Field wft = run.trajectory.sample(s.t_end);
    out.l1_distance = oracle::l1_distance(wft, fine.field, out.z_lo, out.z_hi).total();
    out.self_gap = oracle::l1_distance(coarse.field, fine.field, out.z_lo, out.z_hi).total();
    return out;
}

double velocity_integral(const Field& f, double a, double b)
{
    double total = 0.0, lo = a;
    for (std::size_t i = 0; i <= f.breaks.size() && lo < b; ++i) {
        const double hi = i < f.breaks.size() ? std::min(f.breaks[i], b) : b;
        if (hi > lo) {
            total += (hi - lo) * f.values[i].v;
            lo = hi;
        }
    }
    return total;
}

ConservationCheck conservation_check(Scenario s, double eps_coarse, double eps_fine)
{
    const auto [lo, hi] = plot_window(s);
    RunOptions opt;
    opt.keep_ledger = false;
    auto drift = [&](double eps, std::size_t& events) {
        s.eps = eps;
        const RunResult r = run(s, opt);
        events = r.events;
        return std::abs(velocity_integral(r.trajectory.sample(s.t_end), lo, hi) -
                        velocity_integral(r.trajectory.sample(0.0), lo, hi));
    };
    ConservationCheck c;
    c.eps_coarse = eps_coarse;
    c.eps_fine = eps_fine;
    c.drift_coarse = drift(eps_coarse, c.events_coarse);
    c.drift_fine = drift(eps_fine, c.events_fine);
    return c;
}

} // namespace machzero
