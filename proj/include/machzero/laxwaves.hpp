#pragma once

#include "machzero/eos.hpp"

namespace machzero {

/// Pressure and velocity: the unknowns carried across fronts and interfaces.
struct State {
    double p = 1.0;
    double v = 0.0;

    friend bool operator==(const State&, const State&) = default;
};

enum class WaveFamily { One, Two };
enum class WaveKind { Shock, Rarefaction };

const char* to_string(WaveFamily f) noexcept;
const char* to_string(WaveKind k) noexcept;

/// Table of signs: 1-waves are shocks for sigma > 0, 2-waves for sigma < 0.
/// Throws ZeroSizeWave for sigma == 0.
WaveKind classify(WaveFamily fam, double sigma);

/// Velocity reached along the family's Lax curve through `anchor`
/// (the anchor is the left state of the wave for both families).
double lax_velocity(const Medium& m, WaveFamily fam, double p, const State& anchor);

/// kappa (p - p0) F(Pi p, Pi p0): the velocity drop along the 1-curve.
double one_curve_drop(const Medium& m, double p, double p0);
/// kappa (p - p0) F(Pi p0, Pi p): the velocity rise along the 2-curve.
double two_curve_rise(const Medium& m, double p0, double p);
/// d/dp of one_curve_drop(m, p, p0).
double one_curve_drop_slope(const Medium& m, double p, double p0);
/// d/dp0 of two_curve_rise(m, p0, p).
double two_curve_rise_anchor_slope(const Medium& m, double p0, double p);

/// Characteristic speed in mass coordinate: -+ sqrt(-1/T_m'(p)).
double char_speed(const Medium& m, WaveFamily fam, double p);

/// Rankine-Hugoniot speed s = -+ sqrt(-dp/dtau). Throws NotAShock when the
/// jump is not a Lax shock of the family.
double shock_speed(const Medium& m, WaveFamily fam, double p_left, double p_right);

/// lambda(left) > s > lambda(right) for the family.
bool satisfies_lax_inequalities(const Medium& m, WaveFamily fam, double p_left, double p_right);

} // namespace machzero
