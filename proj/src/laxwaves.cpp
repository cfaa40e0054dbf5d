#include "machzero/laxwaves.hpp"

#include <cmath>

#include "machzero/errors.hpp"

namespace machzero {

const char* to_string(WaveFamily f) noexcept { return f == WaveFamily::One ? "1" : "2"; }

const char* to_string(WaveKind k) noexcept { return k == WaveKind::Shock ? "shock" : "rarefaction"; }

WaveKind classify(WaveFamily fam, double sigma)
{
    if (sigma == 0.0)
        throw ZeroSizeWave("wave of zero size has no type");
    const bool positive = sigma > 0.0;
    if (fam == WaveFamily::One)
        return positive ? WaveKind::Shock : WaveKind::Rarefaction;
    return positive ? WaveKind::Rarefaction : WaveKind::Shock;
}

double one_curve_drop(const Medium& m, double p, double p0)
{
    m.check(p);
    m.check(p0);
    if (p == p0)
        return 0.0;
    return m.scale() * (p - p0) * m.kernel(m.transform(p), m.transform(p0));
}

double two_curve_rise(const Medium& m, double p0, double p)
{
    m.check(p);
    m.check(p0);
    if (p == p0)
        return 0.0;
    return m.scale() * (p - p0) * m.kernel(m.transform(p0), m.transform(p));
}

double one_curve_drop_slope(const Medium& m, double p, double p0)
{
    m.check(p);
    m.check(p0);
    const double x = m.transform(p);
    const double y = m.transform(p0);
    return m.scale() * m.base().branch_slope(x, y, p < p0);
}

double two_curve_rise_anchor_slope(const Medium& m, double p0, double p)
{
    m.check(p);
    m.check(p0);
    const double x = m.transform(p0);
    const double y = m.transform(p);
    return -m.scale() * m.base().branch_slope(x, y, p0 < p);
}

double lax_velocity(const Medium& m, WaveFamily fam, double p, const State& anchor)
{
    if (fam == WaveFamily::One)
        return anchor.v - one_curve_drop(m, p, anchor.p);
    return anchor.v + two_curve_rise(m, anchor.p, p);
}

double char_speed(const Medium& m, WaveFamily fam, double p)
{
    m.check(p);
    const double c = 1.0 / (m.scale() * m.base().root_compressibility(m.transform(p)));
    return fam == WaveFamily::One ? -c : c;
}

double shock_speed(const Medium& m, WaveFamily fam, double p_left, double p_right)
{
    m.check(p_left);
    m.check(p_right);
    const double sigma = p_right - p_left;
    if (sigma == 0.0 || classify(fam, sigma) != WaveKind::Shock)
        throw NotAShock("jump is not a shock of this family");
    // -dtau/dp = kappa^2 * secant of T on the transformed pressures.
    const double k = m.scale();
    const double d = m.base().secant(m.transform(p_left), m.transform(p_right));
    const double s = 1.0 / (k * std::sqrt(d));
    return fam == WaveFamily::One ? -s : s;
}

bool satisfies_lax_inequalities(const Medium& m, WaveFamily fam, double p_left, double p_right)
{
    const double s = shock_speed(m, fam, p_left, p_right);
    return char_speed(m, fam, p_left) > s && s > char_speed(m, fam, p_right);
}

} // namespace machzero
