#include <doctest.h>

#include <cmath>

#include "machzero/errors.hpp"
#include "machzero/fixtures.hpp"
#include "machzero/limits.hpp"

using namespace machzero;

namespace {

Scenario pushed(double dp)
{
    Scenario s;
    s.t_end = 1.0;
    s.wtv_budget = 10.0;
    s.gas = GammaLaw{1.0, 1.4};
    s.initial = Field{{-0.5}, {State{1.0 + dp, 0.0}, State{1.0, 0.0}}};
    return s;
}

} // namespace

TEST_CASE("piston path interpolation")
{
    const PistonPath path{{0.0, 1.0, 2.0}, {0.0, 1.0, 3.0}};
    CHECK(path.at(0.5) == doctest::Approx(0.5));
    CHECK(path.at(1.5) == doctest::Approx(2.0));
    CHECK(path.at(2.0) == doctest::Approx(3.0));
    CHECK_THROWS_AS(path.at(2.5), OutOfRange);
}

TEST_CASE("piston stays at rest in equilibrium")
{
    Scenario s;
    s.t_end = 1.0;
    const LimitTrajectory lim = run_limit_model(s, 0.01);
    REQUIRE(!lim.piston.v.empty());
    for (double v : lim.piston.v)
        CHECK(v == 0.0);
    CHECK(lim.lipschitz_bound == 0.0);
    CHECK(lim.piston.t.back() == doctest::Approx(1.0));
}

TEST_CASE("higher left pressure pushes the piston right")
{
    const LimitTrajectory lim = run_limit_model(pushed(0.05), 0.01);
    CHECK(lim.piston.v.back() > 0.0);
    // The pressure wave needs t = 0.5 to reach the piston.
    CHECK(lim.piston.at(0.4) == 0.0);
    for (std::size_t i = 1; i < lim.piston.v.size(); ++i)
        CHECK(lim.piston.v[i] >= lim.piston.v[i - 1] - 1e-12);
    CHECK(lim.lipschitz_bound > 0.0);
}

TEST_CASE("explicit Euler coupling is first order in the piston step")
{
    const Scenario s = pushed(0.05);
    const double a = run_limit_model(s, 0.01).piston.at(1.0);
    const double b = run_limit_model(s, 0.005).piston.at(1.0);
    const double c = run_limit_model(s, 0.0025).piston.at(1.0);
    const double ratio = std::abs(a - b) / std::abs(b - c);
    CHECK(ratio > 1.3);
    CHECK(ratio < 3.0);
}

TEST_CASE("limit model needs a rigid initial liquid")
{
    Scenario s;
    s.initial = Field{{0.5}, {State{1.0, 0.0}, State{1.0, 0.01}}};
    CHECK_THROWS_AS(run_limit_model(s, 0.01), ValidationError);
    CHECK_THROWS_AS(run_limit_model(Scenario{}, 0.0), ValidationError);
}

TEST_CASE("window mean of a step series")
{
    const Field series{{1.0}, {State{2.0, 0.0}, State{4.0, 1.0}}};
    CHECK(window_mean(series, 0.0, 2.0, &State::p) == doctest::Approx(3.0));
    CHECK(window_mean(series, 0.5, 1.0, &State::p) == doctest::Approx(2.0));
    CHECK(window_mean(series, 0.0, 2.0, &State::v) == doctest::Approx(0.5));
}

TEST_CASE("weak-star error vanishes at rest")
{
    Scenario s;
    s.t_end = 1.0;
    const RunResult r = run(s);
    const Field flat = Field::constant(State{1.0, 0.0});
    const std::vector<double> grid{0.25, 0.5, 0.75};
    const auto err = weakstar_pressure_error(r.trajectory, {{0.0, 0.5}, {0.5, 1.0}}, grid, flat, flat, s.m);
    REQUIRE(err.size() == 2);
    CHECK(err[0] == doctest::Approx(0.0));
    CHECK(err[1] == doctest::Approx(0.0));
}

TEST_CASE("liquid volume and interfaces at rest")
{
    Scenario s;
    s.m = 2.0;
    s.t_end = 1.0;
    const double tau_bar = s.liquid().tau_bar();
    CHECK(liquid_volume(s) == doctest::Approx(2.0 * tau_bar));

    const RunResult r = run(s);
    const InterfacePaths paths = eulerian_interfaces(r.trajectory, s.m, 0.0, liquid_volume(s));
    REQUIRE(!paths.t.empty());
    CHECK(paths.a.back() == doctest::Approx(0.0));
    CHECK(paths.b.back() == doctest::Approx(2.0 * tau_bar));
    CHECK_THROWS_AS(eulerian_interfaces(Trajectory{}, s.m, 0.0, 1.0), MissingTrace);

    const InterfacePaths slab = limit_interfaces(PistonPath{{0.0, 1.0}, {1.0, 1.0}}, 0.0, 2.0);
    CHECK(slab.a.back() == doctest::Approx(1.0));
    CHECK(slab.b.back() == doctest::Approx(3.0));
}

TEST_CASE("kappa sweep validation and single kappa")
{
    const Scenario s = standard_scenario(1.0);
    CHECK_THROWS_AS(kappa_sweep(s, {}), ValidationError);
    CHECK_THROWS_AS(kappa_sweep(s, {0.1, 0.2}), ValidationError);
    CHECK_THROWS_AS(kappa_sweep(s, {1.5, 0.2}), ValidationError);
    CHECK_THROWS_AS(kappa_sweep(s, {0.2, 0.0}), ValidationError);

    const SweepReport one = kappa_sweep(s, {0.2});
    CHECK(one.verdicts.empty());
    REQUIRE(one.records.size() == 1);
    CHECK(one.records[0].weakstar.size() == 4);
    CHECK(one.records[0].tv_v > 0.0);
}

TEST_CASE("liquid variation scales with kappa on the standard fixture")
{
    SweepOptions opt;
    opt.parallel = false;
    const SweepReport rep = kappa_sweep(standard_scenario(1.0), {0.2, 0.1, 0.05}, opt);
    REQUIRE(rep.records.size() == 3);
    CHECK(rep.passed());
    for (const KappaRecord& r : rep.records) {
        CHECK(r.tv_v / r.kappa == doctest::Approx(0.03).epsilon(0.1));
        CHECK(r.tv_tau / (r.kappa * r.kappa) == doctest::Approx(0.03).epsilon(0.1));
        CHECK(r.tv_p <= rep.tv_p_cap);
    }
    CHECK(rep.records[2].piston_error < rep.records[0].piston_error);
}
