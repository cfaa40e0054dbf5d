#include "machzero/field.hpp"

#include <algorithm>

namespace machzero {

const State& Field::at(double z) const
{
    const auto it = std::upper_bound(breaks.begin(), breaks.end(), z);
    return values[static_cast<std::size_t>(it - breaks.begin())];
}

} // namespace machzero
