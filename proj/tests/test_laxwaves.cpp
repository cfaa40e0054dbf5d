#include "doctest.h"

#include <cmath>

#include "machzero/errors.hpp"
#include "machzero/laxwaves.hpp"
#include "machzero/oracle.hpp"

using namespace machzero;

namespace {
const GammaLaw isothermal{1.0, 1.0};
const Medium gas{isothermal};
const Medium liquid01{LiquidEos{isothermal, 1.0, 0.1}};
} // namespace

TEST_CASE("sign table")
{
    CHECK(classify(WaveFamily::One, 0.1) == WaveKind::Shock);
    CHECK(classify(WaveFamily::One, -0.1) == WaveKind::Rarefaction);
    CHECK(classify(WaveFamily::Two, 0.1) == WaveKind::Rarefaction);
    CHECK(classify(WaveFamily::Two, -0.1) == WaveKind::Shock);
    CHECK_THROWS_AS(classify(WaveFamily::One, 0.0), ZeroSizeWave);
}

TEST_CASE("Lax curves through the anchor")
{
    const State anchor{1.3, 0.2};
    CHECK(lax_velocity(gas, WaveFamily::One, 1.3, anchor) == 0.2);
    CHECK(lax_velocity(liquid01, WaveFamily::Two, 1.3, anchor) == 0.2);
    CHECK(lax_velocity(gas, WaveFamily::One, 4.0, State{1.0, 0.0}) == doctest::Approx(-1.5).epsilon(1e-14));
    const double f = std::log(1.01) / 0.01;
    CHECK(lax_velocity(liquid01, WaveFamily::Two, 2.0, State{1.0, 0.0}) ==
          doctest::Approx(0.1 * f).epsilon(1e-13));
    CHECK(0.1 * f == doctest::Approx(0.0995033).epsilon(1e-6));
}

TEST_CASE("Lax curves agree with the branchwise integral form")
{
    for (double kappa : {1.0, 0.1, 0.01}) {
        const Medium liq{LiquidEos{GammaLaw{1.0, 1.4}, 1.0, kappa}};
        const State anchor{1.0, 0.3};
        for (double p : {0.5, 0.9, 1.1, 2.5}) {
            for (WaveFamily fam : {WaveFamily::One, WaveFamily::Two}) {
                const double a = lax_velocity(liq, fam, p, anchor);
                const double b = oracle::lax_velocity_direct(liq, fam, p, anchor);
                CHECK(std::abs(a - b) <= 1e-10);
            }
        }
    }
}

TEST_CASE("characteristic and shock speeds")
{
    CHECK(char_speed(gas, WaveFamily::Two, 1.0) == doctest::Approx(1.0));
    CHECK(char_speed(gas, WaveFamily::One, 1.0) == doctest::Approx(-1.0));
    CHECK(std::abs(char_speed(liquid01, WaveFamily::One, 1.0)) == doctest::Approx(10.0).epsilon(1e-13));
    CHECK(shock_speed(gas, WaveFamily::One, 1.0, 4.0) == doctest::Approx(-2.0).epsilon(1e-14));
    const double expected = std::sqrt(1.0 / (1.0 - 1.0 / 1.01));
    CHECK(shock_speed(liquid01, WaveFamily::Two, 2.0, 1.0) == doctest::Approx(expected).epsilon(1e-12));
    CHECK(expected == doctest::Approx(10.0499).epsilon(1e-5));
    CHECK_THROWS_AS(shock_speed(gas, WaveFamily::One, 2.0, 1.0), NotAShock);
}

TEST_CASE("shocks satisfy Rankine-Hugoniot and Lax inequalities")
{
    for (const Medium* m : {&gas, &liquid01}) {
        const State left{1.2, 0.1};
        for (double dp : {0.05, 0.4, 2.0}) {
            // 1-shock: right pressure above left.
            const State r1{left.p + dp, lax_velocity(*m, WaveFamily::One, left.p + dp, left)};
            const double s1 = shock_speed(*m, WaveFamily::One, left.p, r1.p);
            const double dtau1 = m->tau(r1.p) - m->tau(left.p);
            CHECK(std::abs(s1 * dtau1 + (r1.v - left.v)) <= 1e-10);
            CHECK(std::abs(s1 * (r1.v - left.v) - (r1.p - left.p)) <= 1e-10);
            CHECK(satisfies_lax_inequalities(*m, WaveFamily::One, left.p, r1.p));
            // 2-shock: right pressure below left.
            const double pr = left.p / (1.0 + dp);
            const State r2{pr, lax_velocity(*m, WaveFamily::Two, pr, left)};
            const double s2 = shock_speed(*m, WaveFamily::Two, left.p, r2.p);
            const double dtau2 = m->tau(r2.p) - m->tau(left.p);
            CHECK(std::abs(s2 * dtau2 + (r2.v - left.v)) <= 1e-10);
            CHECK(std::abs(s2 * (r2.v - left.v) - (r2.p - left.p)) <= 1e-10);
            CHECK(satisfies_lax_inequalities(*m, WaveFamily::Two, left.p, r2.p));
        }
    }
}
