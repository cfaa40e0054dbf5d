#include "machzero/glimm.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <random>

#include "machzero/errors.hpp"
#include "machzero/riemann.hpp"

namespace machzero {

namespace {

// Sums over one interval of the approaching-pair potential.
struct PairAccumulator {
    std::array<double, 2> sum{};     // |sigma| per family
    std::array<double, 2> sum_sq{};  // sigma^2 per family
    std::array<double, 2> rare{};    // |sigma| of rarefactions per family
    std::array<double, 2> rare_sq{};
    double cross = 0.0;              // 2-wave on the left, 1-wave on the right
    double twos_so_far = 0.0;

    void add(const Front& f)
    {
        const std::size_t i = f.family == WaveFamily::One ? 0 : 1;
        const double s = std::abs(f.sigma);
        sum[i] += s;
        sum_sq[i] += s * s;
        if (f.kind == WaveKind::Rarefaction) {
            rare[i] += s;
            rare_sq[i] += s * s;
        }
        if (f.family == WaveFamily::One)
            cross += s * twos_so_far;
        else
            twos_so_far += s;
    }

    double total() const
    {
        double q = cross;
        for (std::size_t i = 0; i < 2; ++i) {
            const double all_pairs = 0.5 * (sum[i] * sum[i] - sum_sq[i]);
            const double rare_pairs = 0.5 * (rare[i] * rare[i] - rare_sq[i]);
            q += all_pairs - rare_pairs;
        }
        return std::max(q, 0.0);
    }
};

double pair_products(const std::vector<WaveRecord>& waves)
{
    double s = 0.0;
    for (std::size_t i = 0; i < waves.size(); ++i)
        for (std::size_t j = i + 1; j < waves.size(); ++j)
            s += std::abs(waves[i].sigma * waves[j].sigma);
    return s;
}

double family_mass(const std::vector<WaveRecord>& waves, WaveFamily fam)
{
    double s = 0.0;
    for (const WaveRecord& w : waves)
        if (w.family == fam)
            s += std::abs(w.sigma);
    return s;
}

} // namespace

double wtv(const Field& field, double kappa, double m)
{
    if (!(kappa > 0.0))
        throw DomainError("kappa must be positive");
    double total = 0.0;
    for (std::size_t i = 0; i < field.breaks.size(); ++i) {
        const State& a = field.values[i];
        const State& b = field.values[i + 1];
        const double z = field.breaks[i];
        const double dv = std::abs(b.v - a.v);
        total += std::abs(b.p - a.p);
        total += (z > 0.0 && z < m) ? dv / kappa : dv;
    }
    return total;
}

GlimmReport upsilon(const std::list<Front>& fronts, const GlimmWeights& w, double kappa)
{
    GlimmReport r;
    PairAccumulator left, liquid, right;
    for (const Front& f : fronts) {
        const double s = std::abs(f.sigma);
        const double dv = std::abs(f.right.v - f.left.v);
        r.wtv += s;
        switch (f.region) {
        case Region::LeftGas:
            (f.family == WaveFamily::Two ? r.V_Gin : r.V_Gout) += s;
            left.add(f);
            r.wtv += dv;
            break;
        case Region::RightGas:
            (f.family == WaveFamily::One ? r.V_Gin : r.V_Gout) += s;
            right.add(f);
            r.wtv += dv;
            break;
        case Region::Liquid:
            r.V_L += s;
            liquid.add(f);
            r.wtv += dv / kappa;
            break;
        case Region::Solid:
            break;
        }
    }
    r.Q_G = left.total() + right.total();
    r.Q_L = liquid.total();
    r.upsilon = w.K_in * r.V_Gin + r.V_Gout + w.K_L * r.V_L + w.H_G * r.Q_G + kappa * kappa * w.H_L * r.Q_L;
    return r;
}

GlimmWeights default_weights(double C, double c, double delta_bar)
{
    if (!(c > 0.0))
        throw InfeasibleConstants("reflection bound c must be positive");
    if (!(C >= 1.0))
        throw InfeasibleConstants("interaction constant C must be at least 1");
    if (!(delta_bar > 0.0))
        throw InfeasibleConstants("delta_bar must be positive");
    GlimmWeights w;
    w.C = C;
    w.c = c;
    w.K_L = std::max(1.0, std::ceil((C + 2.0) / c));
    w.K_in = std::max(1.0, std::ceil(4.0 + 3.0 * w.K_L));
    w.H_G = std::max(1.0, std::ceil(2.0 * (C * (1.0 + w.K_in) + 1.0)));
    w.H_L = std::max(1.0, std::ceil(2.0 * (C * w.K_L + 1.0)));
    w.delta_bar = std::min({delta_bar, 1.0 / (C * w.H_G + w.H_L), 1.0 / (2.0 * w.H_G + 3.0 * w.H_L)});
    return w;
}

InteractionConstants estimate_constants(const GammaLaw& gas, const GammaLaw& liquid_base, double p_bar,
                                        double p_lo, double p_hi, const std::vector<double>& kappas,
                                        unsigned seed)
{
    if (!(p_lo > kPressureMin) || p_hi < p_lo)
        throw DomainError("pressure box must be positive and ordered");
    InteractionConstants out;

    // Reflection bound from kernel ratios on a grid of the box.
    constexpr int kGrid = 9;
    double ratio = std::numeric_limits<double>::infinity();
    for (double kappa : kappas) {
        const LiquidEos liq{liquid_base, p_bar, kappa};
        for (int i = 0; i < kGrid; ++i) {
            for (int j = 0; j < kGrid; ++j) {
                const double x = p_lo + (p_hi - p_lo) * i / (kGrid - 1);
                const double y = p_lo + (p_hi - p_lo) * j / (kGrid - 1);
                ratio = std::min(ratio, liquid_base.kernel(liq.transform(x), liq.transform(y)) / gas.kernel(x, y));
            }
        }
    }
    out.c = 0.5 * ratio;

    // Interaction constant from random two-wave interactions.
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    const double centre = 0.5 * (p_lo + p_hi);
    const double reach = std::max(0.5 * (p_hi - p_lo), 1e-3 * centre);
    auto size = [&] {
        double s = reach * (2.0 * unit(rng) - 1.0);
        return s == 0.0 ? reach : s;
    };
    auto base_p = [&] { return p_lo + (p_hi - p_lo) * unit(rng); };

    double worst = 1.0;
    auto consider = [&](double value) {
        if (std::isfinite(value))
            worst = std::max(worst, value);
    };
    auto chain = [](const Medium& m, WaveFamily fam, const State& from, double sigma) {
        return State{from.p + sigma, lax_velocity(m, fam, from.p + sigma, from)};
    };

    constexpr int kSamples = 400;
    std::vector<std::pair<Medium, double>> media{{Medium{gas}, 1.0}};
    for (double kappa : kappas)
        media.emplace_back(Medium{LiquidEos{liquid_base, p_bar, kappa}}, kappa * kappa);
    for (const auto& [medium, weight] : media) {
        for (int n = 0; n < kSamples; ++n) {
            const State l{base_p(), 0.0};
            // Different families: 2-wave on the left, 1-wave on the right.
            {
                const double s2 = size(), s1 = size();
                const State mid = chain(medium, WaveFamily::Two, l, s2);
                const State r = chain(medium, WaveFamily::One, mid, s1);
                const auto sol = solve_interior(medium, l, r);
                consider((std::abs(sol.sigma1 - s1) + std::abs(sol.sigma2 - s2)) / std::abs(s1 * s2) / weight);
            }
            // Same family, at least one shock.
            for (WaveFamily fam : {WaveFamily::One, WaveFamily::Two}) {
                double a = size(), b = size();
                if (classify(fam, a) == WaveKind::Rarefaction && classify(fam, b) == WaveKind::Rarefaction)
                    a = -a;
                const State mid = chain(medium, fam, l, a);
                const State r = chain(medium, fam, mid, b);
                const auto sol = solve_interior(medium, l, r);
                const double same = fam == WaveFamily::One ? sol.sigma1 : sol.sigma2;
                const double other = fam == WaveFamily::One ? sol.sigma2 : sol.sigma1;
                consider((std::abs(other) + std::abs(same - (a + b))) / std::abs(a * b) / weight);
            }
        }
    }

    // Interface at z = 0: gas 2-wave from the left, liquid 1-wave from the right.
    for (double kappa : kappas) {
        const LiquidEos liq{liquid_base, p_bar, kappa};
        const Medium g{gas}, l{liq};
        for (int n = 0; n < kSamples; ++n) {
            const State left{base_p(), 0.0};
            const double s2 = n % 3 == 1 ? 0.0 : size();
            const double s1 = n % 3 == 2 ? 0.0 : size();
            const State mid = s2 == 0.0 ? left : chain(g, WaveFamily::Two, left, s2);
            const State right = s1 == 0.0 ? mid : chain(l, WaveFamily::One, mid, s1);
            const auto sol = solve_interface(InterfaceOrientation::GasLeft, gas, liq, left, right);
            const double small = std::max(std::abs(s1), std::abs(s2));
            const double lhs1 = std::abs(sol.sigma1) - std::abs(s2);
            const double den1 = kappa * std::abs(s1) + (kappa + small) * std::abs(s2);
            if (lhs1 > 0.0 && den1 > 0.0)
                consider(lhs1 / den1);
            const double lhs2 = std::abs(sol.sigma2) - (1.0 - out.c * kappa) * std::abs(s1) - 2.0 * std::abs(s2);
            const double den2 = small * std::abs(s2);
            if (lhs2 > 0.0 && den2 > 0.0)
                consider(lhs2 / den2);
        }
    }
    out.C = 2.0 * worst;
    return out;
}

double location_bound(const EventRecord& e, double kappa)
{
    switch (e.location) {
    case EventLocation::Gas:
        return -pair_products(e.incoming);
    case EventLocation::Liquid:
        return -kappa * kappa * pair_products(e.incoming);
    case EventLocation::InterfaceLeft:
        return -family_mass(e.incoming, WaveFamily::Two) - kappa * family_mass(e.incoming, WaveFamily::One);
    case EventLocation::InterfaceRight:
        return -kappa * family_mass(e.incoming, WaveFamily::Two) - family_mass(e.incoming, WaveFamily::One);
    case EventLocation::StripEdge:
    case EventLocation::Wall:
        return 0.0;
    }
    return 0.0;
}

AuditReport audit(const std::vector<EventRecord>& ledger, double kappa, double rel_tol)
{
    AuditReport rep;
    for (std::size_t i = 0; i < ledger.size(); ++i) {
        const EventRecord& e = ledger[i];
        if (e.location == EventLocation::Wall || e.kind == EventClass::PistonUpdate)
            continue;
        ++rep.checked;
        const double before = e.upsilon - e.d_upsilon;
        const double slack = rel_tol * std::max(before, 0.0);
        if (before > 0.0)
            rep.worst_relative = std::max(rep.worst_relative, e.d_upsilon / before);
        const double bound = location_bound(e, kappa);
        rep.worst_margin = std::max(rep.worst_margin, e.d_upsilon - bound);
        if (e.d_upsilon > slack)
            rep.violations.push_back({i, e.t, e.d_upsilon, slack, "potential increased"});
        else if (e.d_upsilon > bound + slack)
            rep.violations.push_back({i, e.t, e.d_upsilon, bound, "location bound exceeded"});
    }
    return rep;
}

} // namespace machzero
