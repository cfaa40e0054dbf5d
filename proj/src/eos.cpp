#include "machzero/eos.hpp"

#include <cmath>
#include <string>

#include "machzero/errors.hpp"

namespace machzero {

namespace {

void require_pressure(double p, const char* what)
{
    if (!(p > kPressureMin) || !std::isfinite(p))
        throw DomainError(std::string(what) + ": pressure " + std::to_string(p) + " outside domain");
}

// (exp(a * log1p(r)) - 1) / (a * r), continuous at a = 0 and r = 0.
double power_quotient(double a, double r)
{
    if (r == 0.0)
        return 1.0;
    const double l = std::log1p(r);
    if (a == 0.0)
        return l / r;
    return std::expm1(a * l) / (a * r);
}

} // namespace

GammaLaw::GammaLaw(double k, double gamma) : k_(k), gamma_(gamma)
{
    if (!(k > 0.0) || !(gamma >= 1.0))
        throw DomainError("gamma law requires k > 0 and gamma >= 1");
    k_root_ = std::pow(k_, 1.0 / gamma_);
    amp_ = std::sqrt(k_root_ / gamma_);
    root_exp_ = (1.0 + gamma_) / (2.0 * gamma_);
}

double GammaLaw::pressure(double tau) const
{
    if (!(tau > 0.0))
        throw DomainError("specific volume must be positive");
    return k_ * std::pow(tau, -gamma_);
}

double GammaLaw::tau(double p) const
{
    require_pressure(p, "tau");
    return k_root_ * std::pow(p, -1.0 / gamma_);
}

double GammaLaw::dtau(double p) const
{
    return -tau(p) / (gamma_ * p);
}

double GammaLaw::root_compressibility(double p) const
{
    require_pressure(p, "root_compressibility");
    return amp_ * std::pow(p, -root_exp_);
}

double GammaLaw::secant(double x, double y) const
{
    require_pressure(x, "secant");
    require_pressure(y, "secant");
    // -T'(s) = amp^2 s^(-2b); antiderivative exponent 1 - 2b = -1/gamma.
    const double a = -1.0 / gamma_;
    const double r = (y - x) / x;
    return amp_ * amp_ * std::pow(x, -2.0 * root_exp_) * power_quotient(a, r);
}

double GammaLaw::mean_root(double x, double y) const
{
    require_pressure(x, "mean_root");
    require_pressure(y, "mean_root");
    // sqrt(-T'(s)) = amp s^(-b); antiderivative exponent 1 - b = (gamma - 1) / (2 gamma).
    const double a = 1.0 - root_exp_;
    const double r = (y - x) / x;
    return amp_ * std::pow(x, -root_exp_) * power_quotient(a, r);
}

double GammaLaw::kernel(double x, double y) const
{
    if (x < y)
        return mean_root(x, y);
    if (x > y)
        return std::sqrt(secant(x, y));
    return root_compressibility(x);
}

double GammaLaw::branch_slope(double x, double y, bool rarefaction) const
{
    // Rarefaction: (x - y) * mean_root = -(I(y) - I(x)), slope sqrt(-T'(x)).
    // Shock: (x - y) * sqrt(D), slope (D - T'(x)) / (2 sqrt(D)).
    if (rarefaction || x == y)
        return root_compressibility(x);
    const double d = secant(x, y);
    return (d - dtau(x)) / (2.0 * std::sqrt(d));
}

LiquidEos::LiquidEos(GammaLaw base, double p_bar, double kappa)
    : base_(base), p_bar_(p_bar), kappa_(kappa)
{
    if (!(kappa > 0.0) || kappa > 1.0)
        throw DomainError("kappa must lie in ]0, 1]");
    require_pressure(p_bar, "p_bar");
    tau_bar_ = base_.tau(p_bar_);
}

void LiquidEos::check_box(double p_lo, double p_hi) const
{
    require_pressure(transform(p_lo), "liquid box (low end)");
    require_pressure(transform(p_hi), "liquid box (high end)");
}

const GammaLaw& Medium::base() const noexcept
{
    if (const auto* liq = std::get_if<LiquidEos>(&law_))
        return liq->base();
    return std::get<GammaLaw>(law_);
}

double Medium::scale() const noexcept
{
    if (const auto* liq = std::get_if<LiquidEos>(&law_))
        return liq->kappa();
    return 1.0;
}

double Medium::transform(double p) const noexcept
{
    if (const auto* liq = std::get_if<LiquidEos>(&law_))
        return liq->transform(p);
    return p;
}

void Medium::check(double p) const
{
    require_pressure(p, "medium");
    require_pressure(transform(p), "medium (transformed)");
}

double Medium::tau(double p) const
{
    check(p);
    return base().tau(transform(p));
}

double Medium::dtau(double p) const
{
    check(p);
    const double s = scale();
    return s * s * base().dtau(transform(p));
}

double tau_of_p(const Medium& m, double p) { return m.tau(p); }

double dtau_dp(const Medium& m, double p) { return m.dtau(p); }

double f_kernel(const Medium& m, double x, double y) { return m.kernel(x, y); }

} // namespace machzero
