#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <new>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "machzero/compare.hpp"
#include "machzero/config.hpp"
#include "machzero/errors.hpp"
#include "machzero/fronttracker.hpp"
#include "machzero/glimm.hpp"
#include "machzero/limits.hpp"
#include "machzero/output.hpp"

namespace fs = std::filesystem;
using nlohmann::json;
using namespace machzero;

namespace {

enum Exit { Ok = 0, Invalid = 1, Numerical = 2, CheckFailed = 3 };

struct Common {
    std::string scenario;
    std::string out = ".";
    std::optional<double> kappa;
};

Scenario load(const Common& c)
{
    Scenario s = parse_scenario(c.scenario, c.kappa);
    if (const char* env = std::getenv("MACHZERO_SEED")) {
        try {
            std::size_t used = 0;
            s.seed = std::stoull(env, &used);
            if (used != std::string(env).size())
                throw std::invalid_argument(env);
        } catch (const std::exception&) {
            throw ValidationError("MACHZERO_SEED", "expected a non-negative integer");
        }
    }
    return s;
}

template <typename Writer>
void write_file(const fs::path& path, Writer&& writer)
{
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw std::runtime_error("cannot write " + path.string());
    writer(out);
}

void write_json(const fs::path& path, const json& j)
{
    write_file(path, [&](std::ostream& out) { out << j.dump(2) << '\n'; });
}

// Weights from the measured interaction constants on the initial pressure
// range widened by one percent.
GlimmWeights measured_weights(const Scenario& s, InteractionConstants& k)
{
    const auto [lo, hi] = std::minmax_element(s.initial.values.begin(), s.initial.values.end(),
                                              [](const State& a, const State& b) { return a.p < b.p; });
    k = estimate_constants(s.gas, s.liquid_base, s.p_bar, 0.99 * lo->p, 1.01 * hi->p, {s.kappa});
    return default_weights(k.C, k.c, 1.0);
}

json weights_json(const GlimmWeights& w, const InteractionConstants& k)
{
    return {{"C", k.C}, {"c", k.c},     {"K_in", w.K_in}, {"K_L", w.K_L},
            {"H_G", w.H_G}, {"H_L", w.H_L}, {"delta_bar", w.delta_bar}};
}

json run_json(const RunResult& r)
{
    json j{{"events", r.events},
           {"fronts_born", r.fronts_born},
           {"max_fronts", r.max_fronts},
           {"max_rarefaction", r.max_rarefaction}};
    if (!r.glimm.empty()) {
        j["upsilon_initial"] = r.glimm.front().report.upsilon;
        j["upsilon_final"] = r.glimm.back().report.upsilon;
        j["wtv_initial"] = r.glimm.front().report.wtv;
        j["wtv_final"] = r.glimm.back().report.wtv;
    }
    return j;
}

int cmd_run(const Common& c, bool glimm)
{
    const Scenario s = load(c);
    const fs::path dir(c.out);
    fs::create_directories(dir);

    RunOptions opt;
    InteractionConstants k;
    if (glimm)
        opt.weights = measured_weights(s, k);
    const RunResult r = run(s, opt);

    std::vector<double> times = s.snapshot_times;
    if (times.empty())
        times = {0.0, 0.25 * s.t_end, 0.5 * s.t_end, 0.75 * s.t_end, s.t_end};
    std::vector<double> points = s.trace_points;
    if (points.empty())
        points = {0.0, 0.5 * s.m, s.m};
    const auto [lo, hi] = plot_window(s);

    write_file(dir / "snapshots.csv", [&](std::ostream& o) { write_snapshots(o, s, r.trajectory, times, lo, hi); });
    write_file(dir / "traces.csv", [&](std::ostream& o) { write_traces(o, r.trajectory, points, s.t_end); });
    write_file(dir / "events.csv", [&](std::ostream& o) { write_events(o, r.ledger); });
    write_file(dir / "glimm.csv", [&](std::ostream& o) { write_glimm(o, r.glimm); });

    json summary{{"command", "run"}, {"scenario", to_json(s)}, {"run", run_json(r)}};
    if (opt.weights)
        summary["weights"] = weights_json(*opt.weights, k);
    write_json(dir / "summary.json", summary);
    std::cout << "events " << r.events << ", fronts born " << r.fronts_born << '\n';
    return Ok;
}

int cmd_sweep(const Common& c, const std::vector<double>& kappas, SweepOptions opt)
{
    Scenario s = load(Common{c.scenario, c.out, c.kappa.value_or(1.0)});
    const fs::path dir(c.out);
    fs::create_directories(dir);
    const SweepReport rep = kappa_sweep(s, kappas, opt);

    write_file(dir / "sweep.csv", [&](std::ostream& o) { write_sweep(o, rep); });
    write_file(dir / "piston.csv",
               [&](std::ostream& o) { write_piston(o, rep.limit, 0.0, liquid_volume(s)); });

    json verdicts = json::array();
    for (const Verdict& v : rep.verdicts) {
        verdicts.push_back({{"name", v.name}, {"passed", v.passed}, {"detail", v.detail}});
        std::cout << (v.passed ? "PASS " : "FAIL ") << v.name << ": " << v.detail << '\n';
    }
    json windows = json::array();
    for (const Window& w : rep.windows)
        windows.push_back({w.first, w.second});
    write_json(dir / "summary.json", {{"command", "sweep"},
                                      {"scenario", to_json(s)},
                                      {"kappas", kappas},
                                      {"windows", windows},
                                      {"tv_p_cap", rep.tv_p_cap},
                                      {"lipschitz_bound", rep.limit.lipschitz_bound},
                                      {"verdicts", verdicts},
                                      {"passed", rep.passed()}});
    return Ok;
}

int cmd_limit(const Common& c, double dt)
{
    const Scenario s = load(Common{c.scenario, c.out, c.kappa.value_or(1.0)});
    const fs::path dir(c.out);
    fs::create_directories(dir);
    const LimitTrajectory lim = run_limit_model(s, dt > 0.0 ? dt : 1e-3 * s.t_end);
    write_file(dir / "piston.csv", [&](std::ostream& o) { write_piston(o, lim, 0.0, liquid_volume(s)); });
    write_json(dir / "summary.json", {{"command", "limit"},
                                      {"scenario", to_json(s)},
                                      {"events", lim.events},
                                      {"piston_velocity_final", lim.piston.v.back()},
                                      {"lipschitz_bound", lim.lipschitz_bound}});
    return Ok;
}

int cmd_compare(const Common& c, int cells, double cfl)
{
    const Scenario s = load(c);
    const fs::path dir(c.out);
    fs::create_directories(dir);
    RunOptions opt;
    opt.keep_ledger = false;
    const RunResult r = run(s, opt);
    const GodunovComparison cmp = compare_godunov(s, r, cells, cfl);
    write_json(dir / "summary.json", {{"command", "compare"},
                                      {"scenario", to_json(s)},
                                      {"cells", cmp.cells},
                                      {"cfl", cfl},
                                      {"window", {cmp.z_lo, cmp.z_hi}},
                                      {"events", r.events},
                                      {"godunov_steps", cmp.steps},
                                      {"l1_distance", cmp.l1_distance},
                                      {"self_gap", cmp.self_gap},
                                      {"passed", cmp.passed()}});
    std::cout << (cmp.passed() ? "PASS" : "FAIL") << " l1_distance " << cmp.l1_distance << " <= 2 x gap "
              << cmp.self_gap << '\n';
    return cmp.passed() ? Ok : CheckFailed;
}

int cmd_audit(const Common& c)
{
    const Scenario s = load(c);
    const fs::path dir(c.out);
    fs::create_directories(dir);
    RunOptions opt;
    InteractionConstants k;
    opt.weights = measured_weights(s, k);
    const RunResult r = run(s, opt);
    const AuditReport rep = audit(r.ledger, s.kappa);

    write_file(dir / "events.csv", [&](std::ostream& o) { write_events(o, r.ledger); });
    write_file(dir / "glimm.csv", [&](std::ostream& o) { write_glimm(o, r.glimm); });
    json violations = json::array();
    for (const AuditViolation& v : rep.violations)
        violations.push_back(
            {{"event", v.event}, {"t", v.t}, {"d_upsilon", v.d_upsilon}, {"bound", v.bound}, {"reason", v.reason}});
    const bool admissible = !r.glimm.empty() && r.glimm.front().report.upsilon < opt.weights->delta_bar;
    write_json(dir / "summary.json", {{"command", "audit"},
                                      {"scenario", to_json(s)},
                                      {"run", run_json(r)},
                                      {"weights", weights_json(*opt.weights, k)},
                                      {"admissible", admissible},
                                      {"checked", rep.checked},
                                      {"worst_relative", rep.worst_relative},
                                      {"worst_margin", rep.worst_margin},
                                      {"violations", violations},
                                      {"passed", rep.passed()}});
    std::cout << (rep.passed() ? "PASS" : "FAIL") << " audit: " << rep.checked << " events, "
              << rep.violations.size() << " violations";
    if (!admissible)
        std::cout << " (initial potential above delta_bar)";
    std::cout << '\n';
    return rep.passed() ? Ok : CheckFailed;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Wave front tracking for a gas-liquid-gas p-system"};
    app.require_subcommand(1);

    Common common;
    double kappa = 0.0;
    auto add_common = [&](CLI::App* sub, bool with_kappa) {
        sub->add_option("--scenario", common.scenario, "Scenario JSON file")->required()->check(CLI::ExistingFile);
        sub->add_option("--out", common.out, "Output directory")->capture_default_str();
        if (with_kappa)
            sub->add_option("--kappa", kappa, "Liquid parameter in ]0, 1], overrides the scenario");
    };

    bool no_glimm = false;
    auto* run_cmd = app.add_subcommand("run", "Front tracking run with CSV output");
    add_common(run_cmd, true);
    run_cmd->add_flag("--no-glimm", no_glimm, "Skip the potential bookkeeping");

    std::vector<double> kappas{0.2, 0.1, 0.05, 0.025};
    SweepOptions sweep_opt;
    bool serial = false;
    auto* sweep_cmd = app.add_subcommand("sweep", "Kappa sweep against the piston model");
    add_common(sweep_cmd, false);
    sweep_cmd->add_option("--kappas", kappas, "Strictly decreasing kappa values")->delimiter(',')->capture_default_str();
    sweep_cmd->add_option("--dt-piston", sweep_opt.dt_piston, "Piston step (0: t_end / 1000)");
    sweep_cmd->add_option("--windows", sweep_opt.windows, "Weak-star time windows")->capture_default_str();
    sweep_cmd->add_flag("--serial", serial, "Run the kappa values one after another");

    double dt_piston = 0.0;
    auto* limit_cmd = app.add_subcommand("limit", "Gas plus rigid piston model");
    add_common(limit_cmd, false);
    limit_cmd->add_option("--dt-piston", dt_piston, "Piston step (0: t_end / 1000)");

    int cells = 800;
    double cfl = 0.45;
    auto* compare_cmd = app.add_subcommand("compare", "Distance to first-order Godunov at t_end");
    add_common(compare_cmd, true);
    compare_cmd->add_option("--cells", cells, "Fine grid cell count (the coarse grid has half)")
        ->capture_default_str()
        ->check(CLI::Range(6, 100000000));
    compare_cmd->add_option("--cfl", cfl, "CFL number")->capture_default_str();

    auto* audit_cmd = app.add_subcommand("audit", "Per-event check of the interaction potential");
    add_common(audit_cmd, true);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? Ok : Invalid;
    }

    for (auto* sub : {run_cmd, compare_cmd, audit_cmd})
        if (sub->parsed() && sub->count("--kappa") > 0)
            common.kappa = kappa;

    try {
        if (run_cmd->parsed())
            return cmd_run(common, !no_glimm);
        if (sweep_cmd->parsed()) {
            sweep_opt.parallel = !serial;
            return cmd_sweep(common, kappas, sweep_opt);
        }
        if (limit_cmd->parsed())
            return cmd_limit(common, dt_piston);
        if (compare_cmd->parsed())
            return cmd_compare(common, cells, cfl);
        return cmd_audit(common);
    } catch (const ValidationError& e) {
        std::cerr << "invalid: " << e.what() << '\n';
        return Invalid;
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << '\n';
        return Invalid;
    } catch (const std::bad_alloc&) {
        std::cerr << "numerical failure: out of memory\n";
        return Numerical;
    } catch (const std::exception& e) {
        std::cerr << "numerical failure: " << e.what() << '\n';
        return Numerical;
    }
}
