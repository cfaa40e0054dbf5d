#pragma once

#include <list>
#include <string>
#include <vector>

#include "machzero/eos.hpp"
#include "machzero/field.hpp"
#include "machzero/front.hpp"

namespace machzero {

struct GlimmWeights {
    double K_in = 1.0;
    double K_L = 1.0;
    double H_G = 1.0;
    double H_L = 1.0;
    double C = 1.0;
    double c = 1.0;
    double delta_bar = 1.0;
};

struct GlimmReport {
    double V_Gin = 0.0;
    double V_Gout = 0.0;
    double V_L = 0.0;
    double Q_G = 0.0;
    double Q_L = 0.0;
    double upsilon = 0.0;
    double wtv = 0.0;
};

/// TV(p) + TV(v; gas) + TV(v; liquid) / kappa for a profile whose liquid is ]0, m[.
double wtv(const Field& field, double kappa, double m);

/// Potentials of a position-ordered front list.
GlimmReport upsilon(const std::list<Front>& fronts, const GlimmWeights& w, double kappa);

/// Smallest integer weights meeting the five monotonicity conditions, and
/// delta_bar shrunk to meet the last two. Throws InfeasibleConstants.
GlimmWeights default_weights(double C, double c, double delta_bar);

struct InteractionConstants {
    double C = 1.0;
    double c = 1.0;
};

/// Measured interaction constant C (safety factor 2, floor 1) and interface
/// reflection bound c (half the smallest kernel ratio) over a pressure box.
InteractionConstants estimate_constants(const GammaLaw& gas, const GammaLaw& liquid_base, double p_bar,
                                        double p_lo, double p_hi, const std::vector<double>& kappas,
                                        unsigned seed = 7);

struct AuditViolation {
    std::size_t event = 0;
    double t = 0.0;
    double d_upsilon = 0.0;
    double bound = 0.0;
    std::string reason;
};

struct AuditReport {
    std::size_t checked = 0;
    std::vector<AuditViolation> violations;
    double worst_relative = -1e300; // max of d_upsilon / upsilon_before
    double worst_margin = -1e300;   // max of d_upsilon - location bound
    bool passed() const noexcept { return violations.empty(); }
};

/// Location bound on the change of the potential for one recorded event.
double location_bound(const EventRecord& e, double kappa);

/// Checks every event of a run: d_upsilon <= rel_tol * upsilon_before and the
/// location bound (to the same tolerance).
AuditReport audit(const std::vector<EventRecord>& ledger, double kappa, double rel_tol = 1e-9);

} // namespace machzero
