#include "machzero/oracle.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>

#include "machzero/errors.hpp"
#include "machzero/riemann.hpp"
#include "machzero/scenario.hpp"

namespace machzero::oracle {

namespace {

// 7-point Gauss-Legendre nodes and weights on [-1, 1].
constexpr std::array<double, 7> kNodes = {
    -0.9491079123427585, -0.7415311855993945, -0.4058451513773972, 0.0,
    0.4058451513773972,  0.7415311855993945,  0.9491079123427585};
constexpr std::array<double, 7> kWeights = {
    0.1294849661688697, 0.2797053914892766, 0.3818300505051189, 0.4179591836734694,
    0.3818300505051189, 0.2797053914892766, 0.1294849661688697};

double panel(const std::function<double(double)>& f, double a, double b)
{
    const double mid = 0.5 * (a + b);
    const double half = 0.5 * (b - a);
    double sum = 0.0;
    for (std::size_t i = 0; i < kNodes.size(); ++i)
        sum += kWeights[i] * f(mid + half * kNodes[i]);
    return sum * half;
}

double adapt(const std::function<double(double)>& f, double a, double b, double whole, double tol,
             int depth)
{
    const double mid = 0.5 * (a + b);
    const double left = panel(f, a, mid);
    const double right = panel(f, mid, b);
    const double refined = left + right;
    if (depth <= 0 || std::abs(refined - whole) <= tol)
        return refined;
    return adapt(f, a, mid, left, 0.5 * tol, depth - 1) + adapt(f, mid, b, right, 0.5 * tol, depth - 1);
}

// Hugoniot branch of a Lax curve: sqrt(-(T(p) - T(p0)) (p - p0)).
double hugoniot_drop(const Medium& m, double p, double p0)
{
    return std::sqrt(-(m.tau(p) - m.tau(p0)) * (p - p0));
}

double rarefaction_integral(const Medium& m, double from, double to)
{
    if (from == to)
        return 0.0;
    auto root = [&m](double xi) { return std::sqrt(-m.dtau(xi)); };
    return integrate(root, from, to, 1e-13);
}

template <typename G>
double bisect_increasing(G&& g, double lo, double hi, double tol)
{
    double glo = g(lo);
    double ghi = g(hi);
    if (glo == 0.0)
        return lo;
    if (ghi == 0.0)
        return hi;
    if ((glo > 0.0) == (ghi > 0.0))
        throw NoBracket("no sign change on the pressure interval");
    const bool increasing = ghi > 0.0;
    while (hi - lo > tol) {
        const double mid = 0.5 * (lo + hi);
        if (mid <= lo || mid >= hi)
            break;
        const double gm = g(mid);
        if (gm == 0.0)
            return mid;
        if ((gm > 0.0) == increasing)
            hi = mid;
        else
            lo = mid;
    }
    return 0.5 * (lo + hi);
}

} // namespace

double integrate(const std::function<double(double)>& f, double a, double b, double rel_tol)
{
    if (a == b)
        return 0.0;
    const double whole = panel(f, a, b);
    const double tol = rel_tol * std::max(std::abs(whole), std::numeric_limits<double>::min());
    return adapt(f, a, b, whole, tol, 40);
}

double lax_velocity_direct(const Medium& m, WaveFamily fam, double p, const State& anchor)
{
    const double p0 = anchor.p;
    if (p == p0)
        return anchor.v;
    if (fam == WaveFamily::One) {
        if (p < p0)
            return anchor.v + rarefaction_integral(m, p, p0);
        return anchor.v - hugoniot_drop(m, p, p0);
    }
    if (p < p0)
        return anchor.v - hugoniot_drop(m, p, p0);
    return anchor.v + rarefaction_integral(m, p0, p);
}

double riemann_bisect(const Medium& lm, const Medium& rm, const State& left, const State& right,
                      double tol, double p_lo, double p_hi)
{
    if (left == right)
        return left.p;
    // Residual uses the closed-form secant/mean kernels directly: no derivatives,
    // no shared root-finding code with the solver under test.
    auto g = [&](double pm) {
        const GammaLaw& lb = lm.base();
        const GammaLaw& rb = rm.base();
        const double xl = lm.transform(pm), yl = lm.transform(left.p);
        const double xr = rm.transform(pm), yr = rm.transform(right.p);
        const double one = (pm < left.p) ? lb.mean_root(xl, yl) : std::sqrt(lb.secant(xl, yl));
        const double two = (pm < right.p) ? rb.mean_root(xr, yr) : std::sqrt(rb.secant(xr, yr));
        return (right.v - left.v) + lm.scale() * (pm - left.p) * one -
               rm.scale() * (right.p - pm) * two;
    };
    auto guarded = [&](double pm) {
        try {
            return g(pm);
        } catch (const DomainError&) {
            return -std::numeric_limits<double>::infinity();
        }
    };
    return bisect_increasing(guarded, p_lo, p_hi, tol);
}

double piston_bisect(const GammaLaw& gas, const State& gas_state, double wall_v, bool gas_on_left,
                     double tol, double p_lo, double p_hi)
{
    if (wall_v == gas_state.v)
        return gas_state.p;
    const Medium m{gas};
    if (gas_on_left) {
        auto g = [&](double pb) {
            return gas_state.v - wall_v - (gas_state.v - lax_velocity_direct(m, WaveFamily::One, pb, gas_state));
        };
        // g decreases in pb; negate.
        return bisect_increasing([&](double pb) { return -g(pb); }, p_lo, p_hi, tol);
    }
    auto g = [&](double pb) {
        return lax_velocity_direct(m, WaveFamily::Two, gas_state.p, State{pb, wall_v}) - gas_state.v;
    };
    return bisect_increasing([&](double pb) { return -g(pb); }, p_lo, p_hi, tol);
}

L1Distance l1_distance(const Field& f1, const Field& f2, double a, double b)
{
    L1Distance out;
    if (!(b > a))
        return out;
    std::vector<double> cuts{a, b};
    for (double z : f1.breaks)
        if (z > a && z < b)
            cuts.push_back(z);
    for (double z : f2.breaks)
        if (z > a && z < b)
            cuts.push_back(z);
    std::sort(cuts.begin(), cuts.end());
    cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());
    for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
        const double w = cuts[i + 1] - cuts[i];
        if (w <= 0.0)
            continue;
        const double mid = 0.5 * (cuts[i] + cuts[i + 1]);
        const State& s1 = f1.at(mid);
        const State& s2 = f2.at(mid);
        out.p += w * std::abs(s1.p - s2.p);
        out.v += w * std::abs(s1.v - s2.v);
    }
    return out;
}

GodunovResult godunov(const Scenario& s, int cells, double cfl, double t_end)
{
    s.validate();
    if (!(cfl > 0.0) || cfl > 0.5)
        throw CFLViolation("CFL number must lie in ]0, 0.5]");
    if (cells < 3)
        throw CFLViolation("too few cells");

    const Medium gas = s.gas_medium();
    const Medium liq = s.liquid_medium();
    const LiquidEos leos = s.liquid();

    // Window: perturbation support plus the gas light cone.
    double z_lo = 0.0, z_hi = s.m;
    double c_gas = 0.0;
    for (double z : s.initial.breaks) {
        z_lo = std::min(z_lo, z);
        z_hi = std::max(z_hi, z);
    }
    for (const State& st : s.initial.values)
        c_gas = std::max(c_gas, std::abs(char_speed(gas, WaveFamily::Two, st.p)));
    const double reach = 1.5 * c_gas * t_end + 0.5;
    const double left_len = -z_lo + reach;
    const double right_len = (z_hi - s.m) + reach;
    const double total = left_len + s.m + right_len;
    const int n_liq = std::max(1, static_cast<int>(std::lround(cells * s.m / total)));
    const double h = s.m / n_liq;
    const int n_left = static_cast<int>(std::ceil(left_len / h));
    const int n_right = std::max(1, cells - n_liq - n_left);
    const int n = n_left + n_liq + n_right;
    const double z0 = -n_left * h;

    auto medium_of = [&](int i) -> const Medium& { return (i >= n_left && i < n_left + n_liq) ? liq : gas; };

    // Cell averages of tau and v from the exact initial profile.
    std::vector<double> tau(n), vel(n);
    for (int i = 0; i < n; ++i) {
        const double a = z0 + i * h, b = a + h;
        const Medium& med = medium_of(i);
        double ta = 0.0, va = 0.0;
        double cur = a;
        std::vector<double> cuts;
        for (double z : s.initial.breaks)
            if (z > a && z < b)
                cuts.push_back(z);
        cuts.push_back(b);
        for (double c : cuts) {
            const State& st = s.initial.at(0.5 * (cur + c));
            ta += (c - cur) * med.tau(st.p);
            va += (c - cur) * st.v;
            cur = c;
        }
        tau[i] = ta / h;
        vel[i] = va / h;
    }

    auto pressure_of = [&](int i) {
        if (&medium_of(i) == &liq) {
            const double k2 = leos.kappa() * leos.kappa();
            return leos.p_bar() + (leos.base().pressure(tau[i]) - leos.p_bar()) / k2;
        }
        return s.gas.pressure(tau[i]);
    };

    GodunovResult res;
    res.dz = h;
    for (int i = 0; i < n; ++i) {
        res.mass_v0 += vel[i] * h;
        res.mass_tau0 += tau[i] * h;
    }

    std::vector<double> pres(n), face_p(n + 1), face_v(n + 1);
    double t = 0.0;
    while (t < t_end) {
        double smax = 0.0;
        for (int i = 0; i < n; ++i) {
            pres[i] = pressure_of(i);
            smax = std::max(smax, std::abs(char_speed(medium_of(i), WaveFamily::Two, pres[i])));
        }
        double dt = cfl * h / smax;
        if (t + dt > t_end)
            dt = t_end - t;

        face_p[0] = pres[0];
        face_v[0] = vel[0];
        face_p[n] = pres[n - 1];
        face_v[n] = vel[n - 1];
        for (int j = 1; j < n; ++j) {
            const State l{pres[j - 1], vel[j - 1]};
            const State r{pres[j], vel[j]};
            if (l == r) {
                face_p[j] = l.p;
                face_v[j] = l.v;
                continue;
            }
            RiemannSolution sol;
            if (j == n_left)
                sol = solve_interface(InterfaceOrientation::GasLeft, s.gas, leos, l, r);
            else if (j == n_left + n_liq)
                sol = solve_interface(InterfaceOrientation::LiquidLeft, s.gas, leos, l, r);
            else
                sol = solve_interior(medium_of(j), l, r);
            face_p[j] = sol.middle.p;
            face_v[j] = sol.middle.v;
        }
        const double r = dt / h;
        for (int i = 0; i < n; ++i) {
            tau[i] += r * (face_v[i + 1] - face_v[i]);
            vel[i] -= r * (face_p[i + 1] - face_p[i]);
        }
        // Net inflow through the two outer faces.
        res.boundary_flux_tau += dt * (face_v[n] - face_v[0]);
        res.boundary_flux_v -= dt * (face_p[n] - face_p[0]);
        t += dt;
        ++res.steps;
    }

    res.field.values.resize(static_cast<std::size_t>(n));
    res.field.breaks.resize(static_cast<std::size_t>(n - 1));
    for (int i = 0; i < n; ++i) {
        res.field.values[i] = {pressure_of(i), vel[i]};
        res.mass_v += vel[i] * h;
        res.mass_tau += tau[i] * h;
        if (i > 0)
            res.field.breaks[i - 1] = z0 + i * h;
    }
    return res;
}

} // namespace machzero::oracle
