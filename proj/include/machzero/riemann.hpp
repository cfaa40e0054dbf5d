#pragma once

#include <vector>

#include "machzero/eos.hpp"
#include "machzero/laxwaves.hpp"

namespace machzero {

inline constexpr double kRiemannTol = 1e-12;

/// Outcome of a Riemann problem: left --1-wave--> middle --2-wave--> right.
struct RiemannSolution {
    State middle;
    double sigma1 = 0.0; // middle.p - left.p
    double sigma2 = 0.0; // right.p - middle.p
    std::vector<double> fan1; // wavelet sizes, empty unless a split rarefaction
    std::vector<double> fan2;
    double residual = 0.0; // |G| at the returned root
    int iterations = 0;
};

enum class InterfaceOrientation { GasLeft, LiquidLeft };
enum class PistonSide { LeftGas, RightGas };

/// Riemann problem inside one medium. The residual is the kappa-rescaled G,
/// (v_r - v_l)/kappa + (p_m - p_l) F(..) - (p_r - p_m) F(..).
RiemannSolution solve_interior(const Medium& m, const State& left, const State& right,
                               double tol = kRiemannTol);

/// Riemann problem across a phase boundary: the 1-wave lives in the left
/// medium, the 2-wave in the right one. The residual is in velocity units.
RiemannSolution solve_interface(InterfaceOrientation orientation, const GammaLaw& gas,
                                const LiquidEos& liquid, const State& left, const State& right,
                                double tol = kRiemannTol);

/// Shared engine: root of the matching condition between two (possibly
/// different) media, residual divided by `scale`.
RiemannSolution solve_between(const Medium& left_medium, const Medium& right_medium,
                              const State& left, const State& right, double scale,
                              double tol = kRiemannTol);

/// Gas state at a rigid wall moving with `wall_v`. For LeftGas the gas fills
/// z < wall and the solution has a single 1-wave (sigma1); for RightGas the gas
/// fills z > wall and the solution has a single 2-wave (sigma2). `middle` is the
/// state touching the wall.
RiemannSolution solve_piston_boundary(PistonSide side, const GammaLaw& gas, const State& gas_state,
                                      double wall_v, double tol = kRiemannTol);

struct Wavelet {
    double sigma;
    State left;
    State right;
    double speed;
};

/// Split a rarefaction of size sigma into ceil(|sigma|/eps) equal wavelets whose
/// states are chained along the exact Lax curve, each moving with the
/// characteristic speed of its left state. Throws NotARarefaction.
std::vector<Wavelet> discretize_rarefaction(const Medium& m, WaveFamily fam, const State& from,
                                            double sigma, double eps);

/// Number of wavelets used for a rarefaction of the given size.
int wavelet_count(double sigma, double eps);

/// Fill fan1/fan2 of a solution with wavelet sizes where the waves are rarefactions.
void split_fans(RiemannSolution& sol, double eps);

} // namespace machzero
