#include "machzero/output.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <ostream>

#include "machzero/laxwaves.hpp"

namespace machzero {

std::string format_number(double x)
{
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

std::pair<double, double> plot_window(const Scenario& s)
{
    double lo = 0.0, hi = s.m, c = 0.0;
    for (double z : s.initial.breaks) {
        lo = std::min(lo, z);
        hi = std::max(hi, z);
    }
    const Medium gas = s.gas_medium();
    for (const State& st : s.initial.values)
        c = std::max(c, std::abs(char_speed(gas, WaveFamily::Two, st.p)));
    const double reach = 1.5 * c * s.t_end + 0.5;
    return {lo - reach, hi + reach};
}

namespace {

// Calls row(a, b, state) for every constant piece of f clipped to [lo, hi].
template <typename Row>
void pieces(const Field& f, double lo, double hi, Row&& row)
{
    double a = lo;
    for (std::size_t i = 0; i <= f.breaks.size(); ++i) {
        const double b = i < f.breaks.size() ? std::min(f.breaks[i], hi) : hi;
        if (b > a) {
            row(a, b, f.values[i]);
            a = b;
        }
        if (a >= hi)
            break;
    }
}

std::string waves(const std::vector<WaveRecord>& w)
{
    std::string out;
    for (const WaveRecord& r : w) {
        if (!out.empty())
            out += ';';
        out += to_string(r.family);
        out += ':';
        out += format_number(r.sigma);
    }
    return out;
}

} // namespace

void write_snapshots(std::ostream& out, const Scenario& s, const Trajectory& traj, const std::vector<double>& times,
                     double z_lo, double z_hi)
{
    out << "t,z,p,v,tau\n";
    for (double t : times) {
        const Field f = traj.sample(t);
        pieces(f, z_lo, z_hi, [&](double a, double b, const State& st) {
            const double tau = s.medium_at(0.5 * (a + b)).tau(st.p);
            for (double z : {a, b})
                out << format_number(t) << ',' << format_number(z) << ',' << format_number(st.p) << ','
                    << format_number(st.v) << ',' << format_number(tau) << '\n';
        });
    }
}

void write_traces(std::ostream& out, const Trajectory& traj, const std::vector<double>& points, double t_end)
{
    out << "z,t,p,v\n";
    for (double z : points) {
        const Field f = traj.trace(z);
        pieces(f, 0.0, t_end, [&](double a, double b, const State& st) {
            for (double t : {a, b})
                out << format_number(z) << ',' << format_number(t) << ',' << format_number(st.p) << ','
                    << format_number(st.v) << '\n';
        });
    }
}

void write_events(std::ostream& out, const std::vector<EventRecord>& ledger)
{
    out << "t,z,location,class,sigmas_in,sigmas_out,d_upsilon\n";
    for (const EventRecord& e : ledger)
        out << format_number(e.t) << ',' << format_number(e.z) << ',' << to_string(e.location) << ','
            << to_string(e.kind) << ',' << waves(e.incoming) << ',' << waves(e.outgoing) << ','
            << format_number(e.d_upsilon) << '\n';
}

void write_glimm(std::ostream& out, const std::vector<GlimmRow>& rows)
{
    out << "t,V_Gin,V_Gout,V_L,Q_G,Q_L,upsilon,wtv\n";
    for (const GlimmRow& r : rows) {
        const GlimmReport& g = r.report;
        out << format_number(r.t) << ',' << format_number(g.V_Gin) << ',' << format_number(g.V_Gout) << ','
            << format_number(g.V_L) << ',' << format_number(g.Q_G) << ',' << format_number(g.Q_L) << ','
            << format_number(g.upsilon) << ',' << format_number(g.wtv) << '\n';
    }
}

void write_sweep(std::ostream& out, const SweepReport& report)
{
    out << "kappa,metric,value\n";
    for (const KappaRecord& r : report.records) {
        auto row = [&](const std::string& name, double value) {
            out << format_number(r.kappa) << ',' << name << ',' << format_number(value) << '\n';
        };
        row("events", static_cast<double>(r.events));
        row("tv_v", r.tv_v);
        row("tv_tau", r.tv_tau);
        row("tv_p", r.tv_p);
        row("tv_v_over_kappa", r.tv_v / r.kappa);
        row("tv_tau_over_kappa2", r.tv_tau / (r.kappa * r.kappa));
        row("tau_deviation", r.tau_deviation);
        row("piston_error", r.piston_error);
        row("interface_error", r.interface_error);
        row("lipschitz_v", r.lipschitz_v);
        row("lipschitz_p", r.lipschitz_p);
        for (std::size_t w = 0; w < r.weakstar.size(); ++w)
            row("weakstar_" + std::to_string(w), r.weakstar[w]);
    }
}

void write_piston(std::ostream& out, const LimitTrajectory& limit, double a_o, double b_o)
{
    const InterfacePaths paths = limit_interfaces(limit.piston, a_o, b_o);
    out << "t,v_l,p_left,p_right,a,b\n";
    for (std::size_t i = 0; i < limit.piston.t.size(); ++i) {
        const double pl = i < limit.p_left.size() ? limit.p_left[i] : limit.p_left.back();
        const double pr = i < limit.p_right.size() ? limit.p_right[i] : limit.p_right.back();
        out << format_number(limit.piston.t[i]) << ',' << format_number(limit.piston.v[i]) << ','
            << format_number(pl) << ',' << format_number(pr) << ',' << format_number(paths.a[i]) << ','
            << format_number(paths.b[i]) << '\n';
    }
}

} // namespace machzero
