#pragma once

#include <variant>

namespace machzero {

/// Pressures at or below this value are treated as vacuum and rejected.
inline constexpr double kPressureMin = 1e-9;

/// Gamma pressure law P(tau) = k * tau^-gamma and its inverse T = P^-1.
///
/// All the kernels are evaluated in closed form. Differences of powers are
/// routed through log1p/expm1 so that the quotients stay accurate when the two
/// arguments are close, which is the common case in the liquid where the
/// transformed pressures differ by kappa^2 times the physical jump.
class GammaLaw {
public:
    GammaLaw(double k, double gamma);

    double k() const noexcept { return k_; }
    double gamma() const noexcept { return gamma_; }

    double pressure(double tau) const;
    double tau(double p) const;
    double dtau(double p) const;
    /// sqrt(-T'(p)).
    double root_compressibility(double p) const;

    /// Mean of -T' over the segment [x, y] (either order); equals
    /// (T(y) - T(x)) / (x - y) and -T'(x) when x == y.
    double secant(double x, double y) const;
    /// Mean of sqrt(-T') over the segment [x, y] (either order).
    double mean_root(double x, double y) const;

    /// Three-branch kernel of the Lax-curve representation:
    /// mean of the root for x < y, root at x == y, root of the mean for x > y.
    double kernel(double x, double y) const;

    /// Derivative with respect to x of (x - y) * kernel(x, y) when the
    /// branch is selected by `rarefaction` rather than by the order of x, y.
    double branch_slope(double x, double y, bool rarefaction) const;

private:
    double k_;
    double gamma_;
    double k_root_;   // k^(1/gamma)
    double amp_;      // sqrt(k^(1/gamma) / gamma)
    double root_exp_; // (1 + gamma) / (2 gamma)
};

/// kappa-parametrized liquid law: T_kappa(p) = T(p_bar + kappa^2 (p - p_bar)).
class LiquidEos {
public:
    LiquidEos(GammaLaw base, double p_bar, double kappa);

    const GammaLaw& base() const noexcept { return base_; }
    double p_bar() const noexcept { return p_bar_; }
    double kappa() const noexcept { return kappa_; }
    double tau_bar() const noexcept { return tau_bar_; }

    /// Pi_kappa(p) = p_bar + kappa^2 (p - p_bar).
    double transform(double p) const noexcept { return p_bar_ + kappa_ * kappa_ * (p - p_bar_); }

    /// Throws DomainError unless Pi_kappa stays positive on [p_lo, p_hi].
    void check_box(double p_lo, double p_hi) const;

private:
    GammaLaw base_;
    double p_bar_;
    double kappa_;
    double tau_bar_;
};

/// A material: either the gas law or the liquid family.
class Medium {
public:
    Medium(GammaLaw gas) : law_(gas) {}
    Medium(LiquidEos liquid) : law_(liquid) {}

    bool is_liquid() const noexcept { return std::holds_alternative<LiquidEos>(law_); }

    const GammaLaw& base() const noexcept;
    /// kappa for the liquid, 1 for the gas.
    double scale() const noexcept;
    /// Pi_kappa for the liquid, identity for the gas.
    double transform(double p) const noexcept;

    double tau(double p) const;
    double dtau(double p) const;

    /// Kernel on already transformed arguments; identical for every kappa.
    double kernel(double x, double y) const { return base().kernel(x, y); }

    /// Raises DomainError when p or its transform is not a valid pressure.
    void check(double p) const;

private:
    std::variant<GammaLaw, LiquidEos> law_;
};

// Free-function forms used across the library.
double tau_of_p(const Medium& m, double p);
double dtau_dp(const Medium& m, double p);
double f_kernel(const Medium& m, double x, double y);

} // namespace machzero
