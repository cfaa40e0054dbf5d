// Acceptance suite: one PASS/FAIL line per criterion, exit code 1 if any fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "machzero/compare.hpp"
#include "machzero/errors.hpp"
#include "machzero/fixtures.hpp"
#include "machzero/fronttracker.hpp"
#include "machzero/glimm.hpp"
#include "machzero/limits.hpp"
#include "machzero/oracle.hpp"
#include "machzero/output.hpp"
#include "machzero/riemann.hpp"

using namespace machzero;

namespace {

using Clock = std::chrono::steady_clock;

const std::vector<double> kOracleKappas{1.0, 0.3, 0.1, 0.03, 0.01};
const std::vector<double> kPotentialKappas{0.2, 0.1, 0.05};
const std::vector<double> kSweepKappas{0.2, 0.1, 0.05, 0.025};
constexpr std::uint64_t kFixtureSeed = 7;

int failures = 0;

void report(const std::string& name, bool passed, const std::string& detail, Clock::time_point start)
{
    const double secs = std::chrono::duration<double>(Clock::now() - start).count();
    std::printf("%s %s: %s [%.2f s]\n", passed ? "PASS" : "FAIL", name.c_str(), detail.c_str(), secs);
    std::fflush(stdout);
    if (!passed)
        ++failures;
}

std::string fmt(const char* f, double a, double b = 0.0, double c = 0.0, double d = 0.0)
{
    char buf[256];
    std::snprintf(buf, sizeof buf, f, a, b, c, d);
    return buf;
}

// Runs of every fixture, kept for the ledger-based criteria.
struct FixtureRun {
    std::string name;
    double kappa;
    RunResult result;
};
std::vector<FixtureRun> fixture_runs;
bool termination_ok = true;

const RunResult* track(const std::string& name, const Scenario& s, const RunOptions& opt)
{
    try {
        fixture_runs.push_back({name, s.kappa, run(s, opt)});
        return &fixture_runs.back().result;
    } catch (const EventCapExceeded&) {
        termination_ok = false;
        std::printf("  %s: event cap exceeded\n", name.c_str());
        return nullptr;
    }
}

void riemann_oracle()
{
    const auto start = Clock::now();
    std::mt19937_64 rng(2024);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    const GammaLaw gas{1.0, 1.4};
    const Medium g{gas};
    double worst = 0.0;
    long problems = 0;
    auto check = [&](const Medium& lm, const Medium& rm, double vscale_l, double vscale_r, bool interface,
                     InterfaceOrientation o, const LiquidEos* liq) {
        for (int i = 0; i < 10000; ++i) {
            const State l{1.0 + 0.1 * u(rng), 0.1 * vscale_l * u(rng)};
            const State r{1.0 + 0.1 * u(rng), 0.1 * vscale_r * u(rng)};
            const double newton = interface ? solve_interface(o, gas, *liq, l, r).middle.p
                                            : solve_between(lm, rm, l, r, lm.scale()).middle.p;
            const double bisect = oracle::riemann_bisect(lm, rm, l, r);
            worst = std::max(worst, std::abs(newton - bisect));
            ++problems;
        }
    };
    check(g, g, 1.0, 1.0, false, InterfaceOrientation::GasLeft, nullptr);
    for (double kappa : kOracleKappas) {
        const LiquidEos liq{GammaLaw{1.0, 1.4}, 1.0, kappa};
        const Medium l{liq};
        check(l, l, kappa, kappa, false, InterfaceOrientation::GasLeft, nullptr);
        check(g, l, 1.0, kappa, true, InterfaceOrientation::GasLeft, &liq);
        check(l, g, kappa, 1.0, true, InterfaceOrientation::LiquidLeft, &liq);
    }
    const double secs = std::chrono::duration<double>(Clock::now() - start).count();
    report("riemann_oracle", worst <= 1e-10 && secs < 10.0,
           fmt("%.0f problems, max |p_newton - p_bisection| = %.3g (<= 1e-10), runtime < 10 s", problems, worst),
           start);
}

void lax_representation()
{
    const auto start = Clock::now();
    double worst = 0.0;
    for (double kappa : kOracleKappas) {
        const Medium liq{LiquidEos{GammaLaw{1.0, 1.4}, 1.0, kappa}};
        for (int i = 0; i < 100; ++i) {
            const double p = 0.5 + 1.5 * i / 99.0;
            for (int j = 0; j < 100; ++j) {
                const State anchor{0.5 + 1.5 * j / 99.0, 0.1};
                for (WaveFamily fam : {WaveFamily::One, WaveFamily::Two}) {
                    const double a = lax_velocity(liq, fam, p, anchor);
                    const double b = oracle::lax_velocity_direct(liq, fam, p, anchor);
                    worst = std::max(worst, std::abs(a - b));
                }
            }
        }
    }
    const double secs = std::chrono::duration<double>(Clock::now() - start).count();
    report("lax_representation", worst <= 1e-10 && secs < 5.0,
           fmt("100x100 grid x %.0f kappas x 2 families, max error %.3g (<= 1e-10), runtime < 5 s",
               static_cast<double>(kOracleKappas.size()), worst),
           start);
}

void potential_monotonicity()
{
    const auto start = Clock::now();
    const GammaLaw iso{1.0, 1.0};
    const InteractionConstants k = estimate_constants(iso, iso, 1.0, 0.99, 1.01, kPotentialKappas);
    RunOptions opt;
    opt.weights = default_weights(k.C, k.c, 1.0);
    std::size_t fixtures = 0, checked = 0, failed = 0, inadmissible = 0;
    double worst_rel = -1e300, worst_margin = -1e300, max_u0 = 0.0;
    for (double kappa : kPotentialKappas) {
        const auto scenarios = perturbed_scenarios(kappa, 20, kFixtureSeed);
        for (std::size_t n = 0; n < scenarios.size(); ++n) {
            const RunResult* r = track("perturbed k=" + std::to_string(kappa) + " #" + std::to_string(n), scenarios[n], opt);
            ++fixtures;
            if (!r) {
                ++failed;
                continue;
            }
            const double u0 = r->glimm.front().report.upsilon;
            max_u0 = std::max(max_u0, u0);
            if (!(u0 < opt.weights->delta_bar))
                ++inadmissible;
            const AuditReport a = audit(r->ledger, kappa);
            checked += a.checked;
            worst_rel = std::max(worst_rel, a.worst_relative);
            worst_margin = std::max(worst_margin, a.worst_margin);
            if (!a.passed())
                ++failed;
        }
    }
    const double secs = std::chrono::duration<double>(Clock::now() - start).count();
    std::ostringstream d;
    d << fixtures << " fixtures, " << checked << " events, " << failed << " failing, " << inadmissible
      << " above delta_bar; C=" << k.C << " c=" << k.c << " delta_bar=" << opt.weights->delta_bar
      << " max Upsilon(0)=" << max_u0 << ", worst dU/U=" << worst_rel << ", worst dU-bound=" << worst_margin
      << " (<= 1e-9 U), runtime < 120 s";
    report("upsilon_monotone", failed == 0 && inadmissible == 0 && secs < 120.0, d.str(), start);
}

void sweep_criteria(Clock::time_point& sweep_start, SweepReport& rep)
{
    sweep_start = Clock::now();
    rep = kappa_sweep(standard_scenario(1.0), kSweepKappas);
    // Ledger runs of the same fixture for the interface and termination checks.
    RunOptions opt;
    for (double kappa : kSweepKappas)
        track("standard k=" + std::to_string(kappa), standard_scenario(kappa), opt);
}

void kappa_scalings(const SweepReport& rep, Clock::time_point start)
{
    bool ok = true;
    std::string detail;
    for (const Verdict& v : rep.verdicts) {
        if (v.name.rfind("tv_", 0) != 0)
            continue;
        ok = ok && v.passed;
        detail += (detail.empty() ? "" : "; ") + v.name + (v.passed ? " ok " : " FAILED ") + "[" + v.detail + "]";
    }
    const double secs = std::chrono::duration<double>(Clock::now() - start).count();
    report("kappa_scalings", ok && secs < 300.0, detail + "; successive ratios in [1/3, 3]", start);
}

void zero_mach(const SweepReport& rep, Clock::time_point start)
{
    bool ok = true;
    std::string detail;
    for (const Verdict& v : rep.verdicts) {
        if (v.name.rfind("tv_", 0) == 0)
            continue;
        ok = ok && v.passed;
        detail += (detail.empty() ? "" : "; ") + v.name + (v.passed ? " ok " : " FAILED ") + "[" + v.detail + "]";
    }
    const double secs = std::chrono::duration<double>(Clock::now() - start).count();
    report("zero_mach_limit", ok && secs < 600.0, detail, start);
}

// Sums of the outgoing sizes per family.
void family_sums(const std::vector<WaveRecord>& w, double& one, double& two)
{
    one = two = 0.0;
    for (const WaveRecord& r : w)
        (r.family == WaveFamily::One ? one : two) += r.sigma;
}

void interface_identity()
{
    const auto start = Clock::now();
    // A few more fixtures with larger, non-admissible data.
    RunOptions opt;
    for (double kappa : {1.0, 0.3, 0.1})
        track("compression k=" + std::to_string(kappa), compression_scenario(kappa, 0.03), opt);

    std::size_t events = 0, single = 0, sign_bad = 0;
    double worst = 0.0;
    for (const FixtureRun& f : fixture_runs) {
        for (const EventRecord& e : f.result.ledger) {
            if (e.kind != EventClass::InterfaceHit)
                continue;
            ++events;
            worst = std::max(worst, std::abs(e.d_sigma_sum));
            if (e.incoming.size() != 1)
                continue;
            ++single;
            const WaveRecord in = e.incoming.front();
            const bool left = e.location == EventLocation::InterfaceLeft;
            // At z = 0 a 2-wave arrives from the gas; at z = m a 1-wave does.
            const bool from_gas = left == (in.family == WaveFamily::Two);
            double one = 0.0, two = 0.0;
            family_sums(e.outgoing, one, two);
            const double transmitted = in.family == WaveFamily::One ? one : two;
            const double reflected = in.family == WaveFamily::One ? two : one;
            bool ok = in.sigma * transmitted >= 0.0;
            ok = ok && (from_gas ? in.sigma * reflected <= 0.0 : in.sigma * reflected >= 0.0);
            if (!ok)
                ++sign_bad;
        }
    }
    std::ostringstream d;
    d << events << " interface events over " << fixture_runs.size() << " fixtures, max |d(s1+s2)| = " << worst
      << " (<= 1e-10); " << single << " single-wave hits, " << sign_bad << " sign-pattern violations";
    report("interface_sigma_sum", worst <= 1e-10 && sign_bad == 0 && events > 0, d.str(), start);
}

void conservation()
{
    const auto start = Clock::now();
    const ConservationCheck c = conservation_check(expansion_scenario(0.1), 1e-3, 5e-4);
    std::ostringstream d;
    d << "expansion fixture, kappa 0.1: drift " << c.drift_coarse << " at eps 1e-3 (" << c.drift_coarse / c.eps_coarse
      << " eps), " << c.drift_fine << " at eps 5e-4 (" << c.drift_fine / c.eps_fine << " eps), ratio " << c.ratio()
      << " in [1.5, 3]; events " << c.events_coarse << ", " << c.events_fine;
    report("conservation_drift", c.passed(), d.str(), start);
}

void godunov_cross_check()
{
    const auto start = Clock::now();
    const Scenario s = standard_scenario(0.1);
    const RunResult* r = track("standard compare", s, RunOptions{});
    if (!r) {
        report("godunov_cross_check", false, "front tracking did not finish", start);
        return;
    }
    const GodunovComparison c = compare_godunov(s, *r, 800, 0.45);
    std::ostringstream d;
    d << "standard fixture, kappa 0.1, T=1: L1(WFT, G800) = " << c.l1_distance << ", gap L1(G400, G800) = "
      << c.self_gap << ", ratio " << c.l1_distance / c.self_gap << " (<= 2)";
    report("godunov_cross_check", c.passed(), d.str(), start);
}

void termination()
{
    const auto start = Clock::now();
    std::size_t total = 0, most = 0;
    std::string worst;
    for (const FixtureRun& f : fixture_runs) {
        total += f.result.events;
        if (f.result.events > most) {
            most = f.result.events;
            worst = f.name;
        }
    }
    std::ostringstream d;
    d << fixture_runs.size() << " fixture runs under the cap " << kDefaultEventCap << ", " << total
      << " events in total, largest " << most << " (" << worst << ")";
    report("termination", termination_ok && most < kDefaultEventCap, d.str(), start);
}

std::string render(const Scenario& s)
{
    const InteractionConstants k = estimate_constants(s.gas, s.liquid_base, s.p_bar, 0.99, 1.01, {s.kappa});
    RunOptions opt;
    opt.weights = default_weights(k.C, k.c, 1.0);
    const RunResult r = run(s, opt);
    const auto [lo, hi] = plot_window(s);
    std::ostringstream out;
    write_snapshots(out, s, r.trajectory, {0.0, 0.5, 1.0}, lo, hi);
    write_traces(out, r.trajectory, {0.0, 0.5, 1.0}, s.t_end);
    write_events(out, r.ledger);
    write_glimm(out, r.glimm);
    return out.str();
}

void determinism()
{
    const auto start = Clock::now();
    const Scenario s = standard_scenario(0.1);
    const std::string a = render(s);
    const std::string b = render(s);
    report("determinism", a == b && !a.empty(),
           "standard fixture rendered twice: " + std::to_string(a.size()) + " bytes of CSV, " +
               (a == b ? "identical" : "different"),
           start);
}

} // namespace

int main()
{
    const std::vector<std::pair<const char*, std::function<void()>>> steps{
        {"riemann_oracle", riemann_oracle},
        {"lax_representation", lax_representation},
        {"upsilon_monotone", potential_monotonicity},
    };
    for (const auto& [name, step] : steps) {
        try {
            step();
        } catch (const std::exception& e) {
            report(name, false, std::string("exception: ") + e.what(), Clock::now());
        }
    }

    Clock::time_point sweep_start;
    SweepReport rep;
    try {
        sweep_criteria(sweep_start, rep);
        kappa_scalings(rep, sweep_start);
        zero_mach(rep, sweep_start);
    } catch (const std::exception& e) {
        report("kappa_scalings", false, std::string("exception: ") + e.what(), Clock::now());
        report("zero_mach_limit", false, std::string("exception: ") + e.what(), Clock::now());
    }

    const std::vector<std::pair<const char*, std::function<void()>>> rest{
        {"interface_sigma_sum", interface_identity},
        {"conservation_drift", conservation},
        {"godunov_cross_check", godunov_cross_check},
        {"termination", termination},
        {"determinism", determinism},
    };
    for (const auto& [name, step] : rest) {
        try {
            step();
        } catch (const std::exception& e) {
            report(name, false, std::string("exception: ") + e.what(), Clock::now());
        }
    }
    std::printf("%d criteria failed\n", failures);
    return failures == 0 ? 0 : 1;
}
