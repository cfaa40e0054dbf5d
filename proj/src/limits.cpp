#include "machzero/limits.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <future>
#include <string>

#include "machzero/errors.hpp"
#include "machzero/oracle.hpp"

namespace machzero {

namespace {

std::size_t piece_index(const Field& f, double x)
{
    return static_cast<std::size_t>(std::upper_bound(f.breaks.begin(), f.breaks.end(), x) - f.breaks.begin());
}

double series_integral(const Field& f, double a, double b, double State::*component)
{
    double total = 0.0;
    double lo = a;
    for (std::size_t i = piece_index(f, a); lo < b; ++i) {
        const double hi = i < f.breaks.size() ? std::min(f.breaks[i], b) : b;
        total += (hi - lo) * (f.values[i].*component);
        lo = hi;
    }
    return total;
}

double interpolate(const std::vector<double>& t, const std::vector<double>& y, double x)
{
    if (t.empty())
        throw OutOfRange("empty path");
    if (x <= t.front())
        return y.front();
    if (x >= t.back())
        return y.back();
    const auto it = std::upper_bound(t.begin(), t.end(), x);
    const std::size_t j = static_cast<std::size_t>(it - t.begin());
    const double w = (x - t[j - 1]) / (t[j] - t[j - 1]);
    return y[j - 1] + w * (y[j] - y[j - 1]);
}

std::vector<double> merged_times(std::vector<double> a, const std::vector<double>& b, double t_end)
{
    a.insert(a.end(), b.begin(), b.end());
    a.push_back(0.0);
    a.push_back(t_end);
    std::erase_if(a, [&](double x) { return x < 0.0 || x > t_end; });
    std::sort(a.begin(), a.end());
    a.erase(std::unique(a.begin(), a.end()), a.end());
    return a;
}

Trajectory region_trajectory(const std::vector<Segment>& all, Region region, const State& background,
                             double t_end)
{
    std::vector<Segment> mine;
    for (const Segment& s : all)
        if (s.region == region)
            mine.push_back(s);
    return Trajectory(std::move(mine), background, t_end);
}

bool strictly_decreasing(const std::vector<double>& x)
{
    for (std::size_t i = 1; i < x.size(); ++i)
        if (!(x[i] < x[i - 1]))
            return false;
    return true;
}

std::string join(const std::vector<double>& x)
{
    std::string out;
    for (double v : x) {
        if (!out.empty())
            out += ", ";
        char buf[32];
        std::snprintf(buf, sizeof buf, "%.4g", v);
        out += buf;
    }
    return out;
}

} // namespace

double PistonPath::at(double time) const
{
    if (t.empty() || time < t.front() || time > t.back())
        throw OutOfRange("piston path evaluated outside its time range");
    return interpolate(t, v, time);
}

LimitTrajectory run_limit_model(const Scenario& s, double dt_piston, RunOptions options)
{
    s.validate();
    if (!(dt_piston > 0.0))
        throw ValidationError("dt_piston", "must be positive");
    const Field& init = s.initial;
    const double v_o = init.at(0.5 * s.m).v;
    for (std::size_t i = 0; i < init.values.size(); ++i) {
        const double lo = i == 0 ? -INFINITY : init.breaks[i - 1];
        const double hi = i == init.breaks.size() ? INFINITY : init.breaks[i];
        if (hi > 0.0 && lo < s.m && init.values[i].v != v_o)
            throw ValidationError("initial.values[" + std::to_string(i) + "].v",
                                  "velocity must be constant on the liquid for the limit model");
    }

    FrontTracker ft(Geometry::pistons(s.gas, s.m), init, s.eps, s.t_end, s.seed, s.kappa, v_o, std::move(options));
    ft.set_wall_velocity(v_o);

    LimitTrajectory out;
    out.m = s.m;
    out.piston.t.push_back(0.0);
    out.piston.v.push_back(v_o);
    out.p_left.push_back(ft.wall_state(0).p);
    out.p_right.push_back(ft.wall_state(1).p);
    double sup_dp = std::abs(out.p_left.back() - out.p_right.back());

    const auto steps = static_cast<std::size_t>(std::max(1.0, std::ceil(s.t_end / dt_piston - 1e-9)));
    double v = v_o;
    double t_prev = 0.0;
    for (std::size_t k = 1; k <= steps; ++k) {
        const double tk = k == steps ? s.t_end : std::min(s.t_end, static_cast<double>(k) * dt_piston);
        ft.advance_to(tk);
        const double pl = ft.wall_state(0).p;
        const double pr = ft.wall_state(1).p;
        sup_dp = std::max(sup_dp, std::abs(pl - pr));
        v += (tk - t_prev) / s.m * (pl - pr);
        ft.set_wall_velocity(v);
        out.piston.t.push_back(tk);
        out.piston.v.push_back(v);
        out.p_left.push_back(pl);
        out.p_right.push_back(pr);
        t_prev = tk;
    }
    out.lipschitz_bound = sup_dp / s.m;

    RunResult r = ft.finish();
    out.events = r.events;
    out.left_gas = region_trajectory(r.trajectory.segments(), Region::LeftGas, init.values.front(), s.t_end);
    out.right_gas = region_trajectory(r.trajectory.segments(), Region::RightGas, init.values.back(), s.t_end);
    return out;
}

double window_mean(const Field& series, double a, double b, double State::*component)
{
    if (!(b > a))
        return series.values[piece_index(series, a)].*component;
    return series_integral(series, a, b, component) / (b - a);
}

std::vector<double> weakstar_pressure_error(const Trajectory& traj, const std::vector<Window>& windows,
                                            const std::vector<double>& z_grid, const Field& left_trace,
                                            const Field& right_trace, double m)
{
    for (const Window& w : windows)
        if (w.first < 0.0 || w.second > traj.t_end() || w.second < w.first)
            throw OutOfRange("window outside [0, t_end]");
    std::vector<Field> traces;
    traces.reserve(z_grid.size());
    for (double z : z_grid)
        traces.push_back(traj.trace(z));
    const double dz = z_grid.empty() ? 0.0 : m / static_cast<double>(z_grid.size());

    std::vector<double> errors;
    for (const Window& w : windows) {
        const double pl = window_mean(left_trace, w.first, w.second, &State::p);
        const double pr = window_mean(right_trace, w.first, w.second, &State::p);
        double err = 0.0;
        for (std::size_t j = 0; j < z_grid.size(); ++j) {
            const double x = z_grid[j] / m;
            const double reference = (1.0 - x) * pl + x * pr;
            err += std::abs(window_mean(traces[j], w.first, w.second, &State::p) - reference) * dz;
        }
        errors.push_back(err);
    }
    return errors;
}

InterfacePaths eulerian_interfaces(const Trajectory& traj, double m, double a_o, double b_o)
{
    if (!(traj.t_end() > 0.0))
        throw MissingTrace("trajectory has no time extent");
    const Field at0 = traj.trace(0.0);
    const Field atm = traj.trace(m);
    InterfacePaths p;
    p.t = merged_times(at0.breaks, atm.breaks, traj.t_end());
    double a = a_o, b = b_o;
    for (std::size_t i = 0; i < p.t.size(); ++i) {
        if (i > 0) {
            a += series_integral(at0, p.t[i - 1], p.t[i], &State::v);
            b += series_integral(atm, p.t[i - 1], p.t[i], &State::v);
        }
        p.a.push_back(a);
        p.b.push_back(b);
    }
    return p;
}

InterfacePaths limit_interfaces(const PistonPath& piston, double a_o, double b_o)
{
    InterfacePaths p;
    p.t = piston.t;
    double shift = 0.0;
    for (std::size_t i = 0; i < piston.t.size(); ++i) {
        if (i > 0)
            shift += 0.5 * (piston.v[i] + piston.v[i - 1]) * (piston.t[i] - piston.t[i - 1]);
        p.a.push_back(a_o + shift);
        p.b.push_back(b_o + shift);
    }
    return p;
}

double liquid_volume(const Scenario& s)
{
    const Medium liquid = s.liquid_medium();
    const Field& f = s.initial;
    double total = 0.0;
    for (std::size_t i = 0; i < f.values.size(); ++i) {
        const double lo = std::max(0.0, i == 0 ? 0.0 : f.breaks[i - 1]);
        const double hi = std::min(s.m, i == f.breaks.size() ? s.m : f.breaks[i]);
        if (hi > lo)
            total += (hi - lo) * liquid.tau(f.values[i].p);
    }
    return total;
}

KappaRecord measure(const Scenario& s, const RunResult& run, const LimitTrajectory& limit,
                    const std::vector<Window>& windows, const SweepOptions& options)
{
    KappaRecord rec;
    rec.kappa = s.kappa;
    rec.events = run.events;
    const Medium liquid = s.liquid_medium();
    const double tau_bar = liquid.tau(s.p_bar);
    const Geometry geo = Geometry::two_phase(s.gas, s.liquid(), s.m, s.eps);
    const std::vector<Segment>& segs = run.trajectory.segments();

    // Liquid TV as a function of time changes only when a segment starts or ends.
    struct Change {
        double t;
        int sign;
        const Segment* seg;
    };
    std::vector<Change> changes;
    for (std::size_t i = 0; i < s.initial.values.size(); ++i) {
        const double lo = i == 0 ? -INFINITY : s.initial.breaks[i - 1];
        const double hi = i == s.initial.breaks.size() ? INFINITY : s.initial.breaks[i];
        if (hi > 0.0 && lo < s.m)
            rec.tau_deviation = std::max(rec.tau_deviation, std::abs(liquid.tau(s.initial.values[i].p) - tau_bar));
    }
    for (const Segment& seg : segs) {
        if (seg.region != Region::Liquid)
            continue;
        rec.tau_deviation = std::max({rec.tau_deviation, std::abs(liquid.tau(seg.left.p) - tau_bar),
                                      std::abs(liquid.tau(seg.right.p) - tau_bar)});
        if (geo.zones[seg.zone].strip)
            continue;
        changes.push_back({seg.t0, +1, &seg});
        changes.push_back({seg.t1, -1, &seg});
    }
    std::sort(changes.begin(), changes.end(), [](const Change& a, const Change& b) {
        return a.t < b.t || (a.t == b.t && a.sign < b.sign);
    });
    double tv_v = 0.0, tv_tau = 0.0, tv_p = 0.0;
    for (std::size_t i = 0; i < changes.size();) {
        std::size_t j = i;
        for (; j < changes.size() && changes[j].t == changes[i].t; ++j) {
            const Segment& seg = *changes[j].seg;
            const double sgn = changes[j].sign;
            tv_v += sgn * std::abs(seg.right.v - seg.left.v);
            tv_tau += sgn * std::abs(liquid.tau(seg.right.p) - liquid.tau(seg.left.p));
            tv_p += sgn * std::abs(seg.sigma);
        }
        if (changes[i].t < s.t_end) {
            rec.tv_v = std::max(rec.tv_v, tv_v);
            rec.tv_tau = std::max(rec.tv_tau, tv_tau);
            rec.tv_p = std::max(rec.tv_p, tv_p);
        }
        i = j;
    }

    // Midpoint velocity against the piston: the difference is linear between merged knots.
    const Field mid = run.trajectory.trace(0.5 * s.m);
    const std::vector<double> knots = merged_times(mid.breaks, limit.piston.t, s.t_end);
    for (std::size_t i = 1; i < knots.size(); ++i) {
        const double c = mid.at(0.5 * (knots[i - 1] + knots[i])).v;
        rec.piston_error = std::max({rec.piston_error, std::abs(c - limit.piston.at(knots[i - 1])),
                                     std::abs(c - limit.piston.at(knots[i]))});
    }

    const InterfacePaths paths = eulerian_interfaces(run.trajectory, s.m, 0.0, liquid_volume(s));
    const InterfacePaths rigid = limit_interfaces(limit.piston, 0.0, s.m * tau_bar);
    for (double t : merged_times(paths.t, rigid.t, s.t_end)) {
        const double da = interpolate(paths.t, paths.a, t) - interpolate(rigid.t, rigid.a, t);
        const double db = interpolate(paths.t, paths.b, t) - interpolate(rigid.t, rigid.b, t);
        rec.interface_error = std::max(rec.interface_error, std::abs(da) + std::abs(db));
    }

    std::vector<double> z_grid;
    for (int j = 0; j < options.z_points; ++j)
        z_grid.push_back((j + 0.5) * s.m / options.z_points);
    rec.weakstar = weakstar_pressure_error(run.trajectory, windows, z_grid, limit.left_gas.trace(0.0),
                                           limit.right_gas.trace(s.m), s.m);

    const double e2 = s.eps * s.eps;
    Field prev = run.trajectory.sample(0.0);
    for (int i = 1; i <= options.lipschitz_samples; ++i) {
        const double dt = s.t_end / options.lipschitz_samples;
        Field next = run.trajectory.sample(std::min(s.t_end, i * dt));
        const oracle::L1Distance d = oracle::l1_distance(prev, next, e2, s.m - e2);
        rec.lipschitz_v = std::max(rec.lipschitz_v, d.v / dt);
        rec.lipschitz_p = std::max(rec.lipschitz_p, s.kappa * d.p / dt);
        prev = std::move(next);
    }
    return rec;
}

bool SweepReport::passed() const noexcept
{
    return std::all_of(verdicts.begin(), verdicts.end(), [](const Verdict& v) { return v.passed; });
}

SweepReport kappa_sweep(const Scenario& s, const std::vector<double>& kappas, const SweepOptions& options)
{
    if (kappas.empty())
        throw ValidationError("kappas", "at least one value is required");
    for (std::size_t i = 0; i < kappas.size(); ++i) {
        if (!(kappas[i] > 0.0 && kappas[i] <= 1.0))
            throw ValidationError("kappas[" + std::to_string(i) + "]", "must lie in ]0, 1]");
        if (i > 0 && !(kappas[i] < kappas[i - 1]))
            throw ValidationError("kappas", "must be strictly decreasing");
    }
    const double dt = options.dt_piston > 0.0 ? options.dt_piston : 1e-3 * s.t_end;

    SweepReport rep;
    for (int k = 0; k < options.windows; ++k)
        rep.windows.emplace_back(s.t_end * k / options.windows, s.t_end * (k + 1) / options.windows);

    RunOptions ro = options.run;
    ro.keep_ledger = false;
    rep.limit = run_limit_model(s, dt, ro);

    auto one = [&](double kappa) {
        Scenario sk = s;
        sk.kappa = kappa;
        const RunResult r = run(sk, ro);
        return measure(sk, r, rep.limit, rep.windows, options);
    };
    if (options.parallel) {
        std::vector<std::future<KappaRecord>> jobs;
        for (double kappa : kappas)
            jobs.push_back(std::async(std::launch::async, one, kappa));
        for (auto& j : jobs)
            rep.records.push_back(j.get());
    } else {
        for (double kappa : kappas)
            rep.records.push_back(one(kappa));
    }

    // Cap for the unweighted liquid pressure variation: a fixed multiple of the
    // unweighted variation of (p, v) of the initial datum on the whole line.
    double tv0 = 0.0;
    for (std::size_t i = 1; i < s.initial.values.size(); ++i)
        tv0 += std::abs(s.initial.values[i].p - s.initial.values[i - 1].p)
               + std::abs(s.initial.values[i].v - s.initial.values[i - 1].v);
    rep.tv_p_cap = 8.0 * tv0;

    if (kappas.size() < 2)
        return rep;

    std::vector<double> v_scaled, tau_scaled, tv_p, piston, tau_dev;
    for (const KappaRecord& r : rep.records) {
        v_scaled.push_back(r.tv_v / r.kappa);
        tau_scaled.push_back(r.tv_tau / (r.kappa * r.kappa));
        tv_p.push_back(r.tv_p);
        piston.push_back(r.piston_error);
        tau_dev.push_back(r.tau_deviation);
    }
    auto bounded_ratios = [](const std::vector<double>& x) {
        for (std::size_t i = 1; i < x.size(); ++i) {
            const double q = x[i] / x[i - 1];
            if (!(q >= 1.0 / 3.0 && q <= 3.0))
                return false;
        }
        return true;
    };
    rep.verdicts.push_back({"tv_v_over_kappa", bounded_ratios(v_scaled), join(v_scaled)});
    rep.verdicts.push_back({"tv_tau_over_kappa2", bounded_ratios(tau_scaled), join(tau_scaled)});
    rep.verdicts.push_back({"tv_p_capped",
                            std::all_of(tv_p.begin(), tv_p.end(), [&](double x) { return x <= rep.tv_p_cap; }),
                            join(tv_p) + " <= " + join({rep.tv_p_cap})});
    rep.verdicts.push_back({"piston_error_decreasing",
                            strictly_decreasing(piston) && piston.back() < 0.5 * piston.front(), join(piston)});
    for (std::size_t w = 0; w < rep.windows.size(); ++w) {
        std::vector<double> e;
        for (const KappaRecord& r : rep.records)
            e.push_back(r.weakstar[w]);
        bool ok = true;
        for (std::size_t i = 1; i < e.size(); ++i)
            ok = ok && e[i] <= e[i - 1];
        rep.verdicts.push_back({"weakstar_window_" + std::to_string(w), ok, join(e)});
    }
    rep.verdicts.push_back({"tau_deviation_decreasing", strictly_decreasing(tau_dev), join(tau_dev)});
    return rep;
}

} // namespace machzero
