#pragma once

#include <vector>

#include "machzero/laxwaves.hpp"

namespace machzero {

/// Piecewise-constant (p, v) profile on the real line. values[0] holds on
/// ]-inf, breaks[0][, values[i] on [breaks[i-1], breaks[i][, and the last value
/// on [breaks.back(), +inf[.
struct Field {
    std::vector<double> breaks;
    std::vector<State> values;

    static Field constant(const State& s) { return Field{{}, {s}}; }

    /// Value at z (right-continuous).
    const State& at(double z) const;
};

} // namespace machzero
