#include "doctest.h"

#include <cmath>

#include "machzero/errors.hpp"
#include "machzero/oracle.hpp"
#include "machzero/riemann.hpp"

using namespace machzero;

namespace {
const GammaLaw isothermal{1.0, 1.0};
const Medium gas{isothermal};
const LiquidEos liquid01{isothermal, 1.0, 0.1};

// Root of (p - 1)/sqrt(p) = 0.1, by the quadratic in sqrt(p).
double symmetric_root()
{
    const double s = (0.1 + std::sqrt(0.01 + 4.0)) / 2.0;
    return s * s;
}
} // namespace

TEST_CASE("trivial Riemann data")
{
    const auto sol = solve_interior(gas, State{1.5, 0.2}, State{1.5, 0.2});
    CHECK(sol.middle == State{1.5, 0.2});
    CHECK(sol.sigma1 == 0.0);
    CHECK(sol.sigma2 == 0.0);
}

TEST_CASE("symmetric gas compression")
{
    const auto sol = solve_interior(gas, State{1.0, 0.1}, State{1.0, -0.1});
    CHECK(sol.middle.p == doctest::Approx(symmetric_root()).epsilon(1e-12));
    CHECK(symmetric_root() == doctest::Approx(1.1051250).epsilon(1e-7));
    CHECK(std::abs(sol.middle.v) <= 1e-12);
    CHECK(sol.sigma1 > 0.0);
    CHECK(sol.sigma2 < 0.0);
    CHECK(sol.middle.p == doctest::Approx(oracle::riemann_bisect(gas, gas, {1.0, 0.1}, {1.0, -0.1})).epsilon(1e-11));
}

TEST_CASE("liquid problem rescales to the gas one")
{
    const Medium liq{liquid01};
    const auto sol = solve_interior(liq, State{1.0, 0.01}, State{1.0, -0.01});
    // Velocity data scaled by kappa give the gas-sized pressure jump; the kernel
    // is evaluated near p_bar so the root sits close to the acoustic value 1.1.
    CHECK(sol.middle.p - 1.0 == doctest::Approx(0.1).epsilon(1e-2));
    CHECK(sol.middle.p < symmetric_root());
    CHECK(std::abs(sol.middle.v) <= 1e-12);
    const double ref = oracle::riemann_bisect(liq, liq, {1.0, 0.01}, {1.0, -0.01});
    CHECK(sol.middle.p == doctest::Approx(ref).epsilon(1e-11));
}

TEST_CASE("interface with a stiff liquid barely moves the velocity")
{
    double prev = 1.0;
    for (double kappa : {0.1, 0.01, 0.001}) {
        const LiquidEos liq{isothermal, 1.0, kappa};
        const State l{1.0, 0.0}, r{1.0, -0.1};
        const auto sol = solve_interface(InterfaceOrientation::GasLeft, isothermal, liq, l, r);
        const double ratio = std::abs(sol.middle.v - r.v) / kappa;
        CHECK(ratio <= 2.0 * 0.1);
        CHECK(std::abs(sol.middle.v - r.v) < prev);
        prev = std::abs(sol.middle.v - r.v);
        const double ref = oracle::riemann_bisect(Medium{isothermal}, Medium{liq}, l, r);
        CHECK(sol.middle.p == doctest::Approx(ref).epsilon(1e-10));
    }
}

TEST_CASE("interface constant datum")
{
    const auto sol = solve_interface(InterfaceOrientation::LiquidLeft, isothermal, liquid01, {1.0, 0.3}, {1.0, 0.3});
    CHECK(sol.middle == State{1.0, 0.3});
}

TEST_CASE("vacuum is reported")
{
    CHECK_THROWS_AS(solve_interior(gas, State{1.0, -50.0}, State{1.0, 50.0}), DomainError);
}

TEST_CASE("piston boundary")
{
    SUBCASE("no wave when the wall follows the gas")
    {
        const auto sol = solve_piston_boundary(PistonSide::LeftGas, isothermal, {1.0, 0.2}, 0.2);
        CHECK(sol.sigma1 == 0.0);
        CHECK(sol.middle == State{1.0, 0.2});
    }
    SUBCASE("wall moving away from the gas expands it")
    {
        // Gas on z < wall, wall moving right.
        const auto sol = solve_piston_boundary(PistonSide::LeftGas, isothermal, {1.0, 0.0}, 0.1);
        CHECK(sol.sigma1 < 0.0);
        CHECK(classify(WaveFamily::One, sol.sigma1) == WaveKind::Rarefaction);
        CHECK(sol.middle.p == doctest::Approx(oracle::piston_bisect(isothermal, {1.0, 0.0}, 0.1, true)).epsilon(1e-11));
        CHECK(sol.middle.v == 0.1);
        // Gas on z > wall, wall moving left: mirror image.
        const auto right = solve_piston_boundary(PistonSide::RightGas, isothermal, {1.0, 0.0}, -0.1);
        CHECK(right.sigma2 > 0.0);
        CHECK(classify(WaveFamily::Two, right.sigma2) == WaveKind::Rarefaction);
        CHECK(right.middle.p == doctest::Approx(sol.middle.p).epsilon(1e-12));
    }
    SUBCASE("wall moving into the gas compresses it")
    {
        const auto sol = solve_piston_boundary(PistonSide::LeftGas, isothermal, {1.0, 0.0}, -0.1);
        CHECK(sol.sigma1 > 0.0);
        const auto right = solve_piston_boundary(PistonSide::RightGas, isothermal, {1.0, 0.0}, 0.1);
        CHECK(right.sigma2 < 0.0);
        CHECK(right.middle.p == doctest::Approx(sol.middle.p).epsilon(1e-12));
        CHECK(right.middle.p ==
              doctest::Approx(oracle::piston_bisect(isothermal, {1.0, 0.0}, 0.1, false)).epsilon(1e-11));
    }
}

TEST_CASE("rarefaction wavelets")
{
    CHECK(wavelet_count(0.05, 0.1) == 1);
    CHECK(wavelet_count(0.3, 0.1) == 3);
    const auto w = discretize_rarefaction(gas, WaveFamily::Two, State{1.0, 0.0}, 0.25, 0.1);
    REQUIRE(w.size() == 3);
    double sum = 0.0;
    for (std::size_t i = 0; i < w.size(); ++i) {
        CHECK(w[i].sigma == doctest::Approx(0.25 / 3.0).epsilon(1e-13));
        CHECK(w[i].speed == doctest::Approx(char_speed(gas, WaveFamily::Two, w[i].left.p)));
        if (i > 0)
            CHECK(w[i].left == w[i - 1].right);
        sum += w[i].sigma;
    }
    CHECK(sum == doctest::Approx(0.25).epsilon(1e-14));
    CHECK(w.back().right.v == doctest::Approx(lax_velocity(gas, WaveFamily::Two, 1.25, {1.0, 0.0})).epsilon(1e-13));
    CHECK_THROWS_AS(discretize_rarefaction(gas, WaveFamily::Two, State{1.0, 0.0}, -0.25, 0.1), NotARarefaction);
}
