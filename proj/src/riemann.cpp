#include "machzero/riemann.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "machzero/errors.hpp"

namespace machzero {

namespace {

constexpr int kMaxIterations = 200;
constexpr double kUpperPressure = 1e12;

// Smallest pressure accepted by the medium (including the liquid transform).
double lowest_pressure(const Medium& m)
{
    const double k2 = m.scale() * m.scale();
    const double pi0 = m.transform(0.0);
    const double floor = 2.0 * kPressureMin;
    return std::max(floor, (floor - pi0) / k2 + floor);
}

struct RootResult {
    double x;
    double residual;
    int iterations;
};

// Root of an increasing function g on ]lower, +inf[ by Newton steps kept inside
// a bracket, bisecting whenever a step leaves it.
template <typename G, typename DG>
RootResult increasing_root(G&& g, DG&& dg, double guess, double lower, double tol)
{
    // Past the tolerance, keep taking Newton steps while they shrink the
    // residual: tiny waves need the root to full precision.
    auto polish = [&](double x, double gx, int it) -> RootResult {
        for (int k = 0; k < 3 && gx != 0.0; ++k) {
            const double d = dg(x);
            if (!(d > 0.0))
                break;
            const double next = x - gx / d;
            if (!(next > lower))
                break;
            const double gn = g(next);
            if (!(std::abs(gn) < std::abs(gx)))
                break;
            x = next;
            gx = gn;
        }
        return {x, std::abs(gx), it};
    };

    double x = std::max(guess, lower);
    double gx = g(x);
    int it = 0;
    if (std::abs(gx) <= tol)
        return polish(x, gx, it);

    double lo = lower, hi = kUpperPressure;
    double glo = std::numeric_limits<double>::quiet_NaN(), ghi = glo;
    if (gx > 0.0) {
        hi = x;
        ghi = gx;
        double step = std::max(x - lower, 0.0) * 0.5;
        double trial = x;
        for (;;) {
            trial = std::max(lower, trial - step);
            const double gt = g(trial);
            if (gt <= 0.0) {
                lo = trial;
                glo = gt;
                break;
            }
            hi = trial;
            ghi = gt;
            if (trial <= lower)
                throw DomainError("Riemann problem requires vacuum (no root above p_min)");
            step *= 2.0;
            if (++it > kMaxIterations)
                throw NoConvergence("bracket search failed (low side)");
        }
    } else {
        lo = x;
        glo = gx;
        double step = std::max(std::abs(x), 1.0) * 0.5;
        double trial = x;
        for (;;) {
            trial += step;
            const double gt = g(trial);
            if (gt >= 0.0) {
                hi = trial;
                ghi = gt;
                break;
            }
            lo = trial;
            glo = gt;
            step *= 2.0;
            if (trial > kUpperPressure || ++it > kMaxIterations)
                throw NoConvergence("bracket search failed (high side)");
        }
    }
    if (glo == 0.0)
        return {lo, 0.0, it};
    if (ghi == 0.0)
        return {hi, 0.0, it};

    // Start Newton from the bracket end with the smaller residual.
    x = std::abs(glo) < std::abs(ghi) ? lo : hi;
    gx = std::abs(glo) < std::abs(ghi) ? glo : ghi;
    for (; it < 4 * kMaxIterations; ++it) {
        if (std::abs(gx) <= tol)
            return polish(x, gx, it);
        const double d = dg(x);
        double next = x - gx / d;
        if (!(d > 0.0) || !(next > lo && next < hi))
            next = 0.5 * (lo + hi);
        if (next == x || hi - lo <= 4.0 * std::numeric_limits<double>::epsilon() * std::abs(hi))
            return {x, std::abs(gx), it};
        x = next;
        gx = g(x);
        if (gx > 0.0)
            hi = x;
        else
            lo = x;
    }
    throw NoConvergence("Newton iteration did not reach tolerance");
}

} // namespace

RiemannSolution solve_between(const Medium& lm, const Medium& rm, const State& left,
                              const State& right, double scale, double tol)
{
    lm.check(left.p);
    rm.check(right.p);
    RiemannSolution sol;
    if (left == right) {
        sol.middle = left;
        return sol;
    }
    // The unknown is the increment d = p_mid - left.p, so small waves keep
    // their relative precision instead of inheriting the ulp of the pressure.
    const double dv = right.v - left.v;
    const double jump = right.p - left.p;
    const double tl = lm.transform(left.p);
    const double tr = rm.transform(right.p);
    auto drop = [&](double d) { return d == 0.0 ? 0.0 : lm.scale() * d * lm.kernel(lm.transform(left.p + d), tl); };
    auto rise = [&](double d) {
        const double e = d - jump;
        return e == 0.0 ? 0.0 : rm.scale() * e * rm.kernel(rm.transform(left.p + d), tr);
    };
    auto g = [&](double d) {
        lm.check(left.p + d);
        return (dv + drop(d) + rise(d)) / scale;
    };
    auto dg = [&](double d) {
        const double pm = left.p + d;
        return (one_curve_drop_slope(lm, pm, left.p) - two_curve_rise_anchor_slope(rm, pm, right.p)) /
               scale;
    };
    // Acoustic guess from the linearized curves.
    const double zl = lm.scale() * lm.base().root_compressibility(tl);
    const double zr = rm.scale() * rm.base().root_compressibility(tr);
    double guess = (zr * jump - dv) / (zl + zr);
    const double lower = std::max(lowest_pressure(lm), lowest_pressure(rm)) - left.p;
    if (!(guess > lower))
        guess = std::max(lower, 0.5 * std::min(left.p, right.p) - left.p);

    const RootResult root = increasing_root(g, dg, guess, lower, tol);
    sol.middle.p = left.p + root.x;
    sol.middle.v = left.v - drop(root.x);
    sol.sigma1 = root.x;
    sol.sigma2 = jump - root.x;
    sol.residual = root.residual;
    sol.iterations = root.iterations;
    return sol;
}

RiemannSolution solve_interior(const Medium& m, const State& left, const State& right, double tol)
{
    return solve_between(m, m, left, right, m.scale(), tol);
}

RiemannSolution solve_interface(InterfaceOrientation orientation, const GammaLaw& gas,
                                const LiquidEos& liquid, const State& left, const State& right,
                                double tol)
{
    const Medium g{gas};
    const Medium l{liquid};
    if (orientation == InterfaceOrientation::GasLeft)
        return solve_between(g, l, left, right, 1.0, tol);
    return solve_between(l, g, left, right, 1.0, tol);
}

RiemannSolution solve_piston_boundary(PistonSide side, const GammaLaw& gas, const State& gas_state,
                                      double wall_v, double tol)
{
    const Medium m{gas};
    m.check(gas_state.p);
    RiemannSolution sol;
    sol.middle = {gas_state.p, wall_v};
    if (wall_v == gas_state.v)
        return sol;

    const double lower = lowest_pressure(m);
    const double z = m.base().root_compressibility(gas_state.p);
    RootResult root{};
    if (side == PistonSide::LeftGas) {
        // gas_state --1--> (pb, wall_v): v - drop(pb) = wall_v, drop increasing in pb.
        auto g = [&](double pb) { return one_curve_drop(m, pb, gas_state.p) - (gas_state.v - wall_v); };
        auto dg = [&](double pb) { return one_curve_drop_slope(m, pb, gas_state.p); };
        root = increasing_root(g, dg, gas_state.p + (gas_state.v - wall_v) / z, lower, tol);
        sol.sigma1 = root.x - gas_state.p;
    } else {
        // (pb, wall_v) --2--> gas_state: wall_v + rise(pb) = v, rise decreasing in pb.
        auto g = [&](double pb) { return (gas_state.v - wall_v) - two_curve_rise(m, pb, gas_state.p); };
        auto dg = [&](double pb) { return -two_curve_rise_anchor_slope(m, pb, gas_state.p); };
        root = increasing_root(g, dg, gas_state.p - (gas_state.v - wall_v) / z, lower, tol);
        sol.sigma2 = gas_state.p - root.x;
    }
    sol.middle.p = root.x;
    sol.residual = root.residual;
    sol.iterations = root.iterations;
    return sol;
}

int wavelet_count(double sigma, double eps)
{
    const double ratio = std::abs(sigma) / eps;
    // Guard against 3 * eps / eps landing just above 3.
    return std::max(1, static_cast<int>(std::ceil(ratio * (1.0 - 1e-12))));
}

std::vector<Wavelet> discretize_rarefaction(const Medium& m, WaveFamily fam, const State& from,
                                            double sigma, double eps)
{
    if (sigma == 0.0 || classify(fam, sigma) != WaveKind::Rarefaction)
        throw NotARarefaction("wave is not a rarefaction of this family");
    if (!(eps > 0.0))
        throw DomainError("eps must be positive");
    const int n = wavelet_count(sigma, eps);
    const double piece = sigma / n;
    std::vector<Wavelet> out;
    out.reserve(static_cast<std::size_t>(n));
    State left = from;
    const double p_end = from.p + sigma;
    for (int j = 0; j < n; ++j) {
        State right;
        right.p = (j == n - 1) ? p_end : from.p + piece * (j + 1);
        right.v = lax_velocity(m, fam, right.p, left);
        out.push_back({right.p - left.p, left, right, char_speed(m, fam, left.p)});
        left = right;
    }
    return out;
}

void split_fans(RiemannSolution& sol, double eps)
{
    auto fan = [eps](WaveFamily fam, double sigma) {
        std::vector<double> out;
        if (sigma == 0.0 || classify(fam, sigma) != WaveKind::Rarefaction)
            return out;
        const int n = wavelet_count(sigma, eps);
        out.assign(static_cast<std::size_t>(n), sigma / n);
        return out;
    };
    sol.fan1 = fan(WaveFamily::One, sol.sigma1);
    sol.fan2 = fan(WaveFamily::Two, sol.sigma2);
}

} // namespace machzero
