#include "machzero/fixtures.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

namespace machzero {

namespace {

Scenario base(double kappa)
{
    Scenario s;
    s.kappa = kappa;
    s.gas = GammaLaw{1.0, 1.4};
    s.t_end = 1.0;
    s.eps = 1e-3;
    s.wtv_budget = 100.0;
    return s;
}

} // namespace

Scenario standard_scenario(double kappa, double u, int steps)
{
    Scenario s = base(kappa);
    const double a = -1.5;
    const double len = 1.0;
    Field f;
    f.values.push_back(State{1.0, u});
    for (int i = 0; i < steps; ++i) {
        f.breaks.push_back(a + len * i / steps);
        const double mid = a + len * (i + 0.5) / steps;
        f.values.push_back(State{1.0, u * 0.5 * (1.0 + std::cos(std::numbers::pi * (mid - a) / len))});
    }
    f.breaks.push_back(a + len);
    f.values.push_back(State{1.0, 0.0});
    s.initial = std::move(f);
    return s;
}

Scenario expansion_scenario(double kappa, double u)
{
    Scenario s = base(kappa);
    s.initial = Field{{-0.5}, {State{1.0, -u}, State{1.0, 0.0}}};
    return s;
}

Scenario compression_scenario(double kappa, double u)
{
    Scenario s;
    s.kappa = kappa;
    s.t_end = 3.0;
    s.initial = Field{{-1.0, 2.0}, {State{1.0, u}, State{1.0, 0.0}, State{1.0, -u}}};
    return s;
}

std::vector<Scenario> perturbed_scenarios(double kappa, int count, std::uint64_t seed, double amplitude)
{
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> unit(-1.0, 1.0);
    std::uniform_int_distribution<int> jumps(1, 2);
    std::vector<Scenario> out;
    for (int n = 0; n < count; ++n) {
        Scenario s = compression_scenario(kappa, 0.0);
        s.seed = seed + static_cast<std::uint64_t>(n);
        const double m = s.m;
        struct Span {
            double lo, hi;
            bool liquid;
        };
        const Span spans[] = {{-2.0, -0.1, false}, {0.1 * m, 0.9 * m, true}, {m + 0.1, m + 2.0, false}};
        Field f;
        State cur{1.0, 0.0};
        f.values.push_back(cur);
        for (const Span& sp : spans) {
            std::uniform_real_distribution<double> where(sp.lo, sp.hi);
            std::vector<double> at(static_cast<std::size_t>(jumps(rng)));
            for (double& z : at)
                z = where(rng);
            std::sort(at.begin(), at.end());
            const double sv = sp.liquid ? kappa : 1.0;
            const double sp2 = sp.liquid ? kappa * kappa : 1.0;
            for (double z : at) {
                if (!f.breaks.empty() && z <= f.breaks.back())
                    continue;
                cur.p += amplitude * sp2 * unit(rng);
                cur.v += amplitude * sv * unit(rng);
                f.breaks.push_back(z);
                f.values.push_back(cur);
            }
        }
        s.initial = std::move(f);
        out.push_back(std::move(s));
    }
    return out;
}

} // namespace machzero
