#include "machzero/scenario.hpp"

#include <cmath>
#include <string>

#include "machzero/errors.hpp"

namespace machzero {

void Scenario::validate() const
{
    if (!(m > 0.0))
        throw ValidationError("m", "liquid mass must be positive");
    if (!(p_o > kPressureMin))
        throw ValidationError("p_o", "reference pressure must be positive");
    if (!(kappa > 0.0) || kappa > 1.0)
        throw ValidationError("kappa", "must lie in ]0, 1]");
    if (!(eps > 0.0))
        throw ValidationError("eps", "must be positive");
    if (!(t_end > 0.0))
        throw ValidationError("t_end", "must be positive");
    if (initial.values.size() != initial.breaks.size() + 1)
        throw ValidationError("initial", "need one more state than breakpoints");

    const double flat = 2.0 * eps * eps;
    for (std::size_t i = 0; i < initial.breaks.size(); ++i) {
        const double z = initial.breaks[i];
        const std::string path = "initial.breaks[" + std::to_string(i) + "]";
        if (!std::isfinite(z))
            throw ValidationError(path, "breakpoint must be finite");
        if (i > 0 && !(z > initial.breaks[i - 1]))
            throw ValidationError(path, "breakpoints must be strictly increasing");
        if (std::abs(z) <= flat)
            throw ValidationError(path, "profile must be continuous and flat around z = 0");
        if (std::abs(z - m) <= flat)
            throw ValidationError(path, "profile must be continuous and flat around z = m");
    }
    const LiquidEos liq = liquid();
    for (std::size_t i = 0; i < initial.values.size(); ++i) {
        const State& s = initial.values[i];
        const std::string path = "initial.values[" + std::to_string(i) + "]";
        if (!(s.p > kPressureMin) || !std::isfinite(s.v))
            throw ValidationError(path, "pressure must be positive and velocity finite");
        if (!(liq.transform(s.p) > kPressureMin))
            throw ValidationError(path, "liquid law undefined at this pressure");
    }
}

} // namespace machzero
