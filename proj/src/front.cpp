#include "machzero/front.hpp"

#include <string>

#include "machzero/errors.hpp"

namespace machzero {

Geometry Geometry::two_phase(const GammaLaw& gas, const LiquidEos& liquid, double m, double eps)
{
    const double w = eps * eps;
    if (!(m > 2.0 * w))
        throw DomainError("liquid slab thinner than its two strips");
    constexpr double inf = std::numeric_limits<double>::infinity();
    const Medium g{gas}, l{liquid};
    Geometry geo;
    geo.zones = {
        {-inf, -w, g, false, Region::LeftGas},  {-w, 0.0, g, true, Region::LeftGas},
        {0.0, w, l, true, Region::Liquid},      {w, m - w, l, false, Region::Liquid},
        {m - w, m, l, true, Region::Liquid},    {m, m + w, g, true, Region::RightGas},
        {m + w, inf, g, false, Region::RightGas},
    };
    geo.boundaries = {BoundaryKind::StripEdge, BoundaryKind::Interface, BoundaryKind::StripEdge,
                      BoundaryKind::StripEdge, BoundaryKind::Interface, BoundaryKind::StripEdge};
    return geo;
}

Geometry Geometry::pistons(const GammaLaw& gas, double m)
{
    if (!(m > 0.0))
        throw DomainError("piston mass must be positive");
    constexpr double inf = std::numeric_limits<double>::infinity();
    const Medium g{gas};
    Geometry geo;
    geo.zones = {{-inf, 0.0, g, false, Region::LeftGas},
                 {0.0, m, g, false, Region::Solid},
                 {m, inf, g, false, Region::RightGas}};
    geo.boundaries = {BoundaryKind::Wall, BoundaryKind::Wall};
    return geo;
}

std::size_t Geometry::locate(double z) const
{
    for (std::size_t k = 0; k < zones.size(); ++k)
        if (z > zones[k].lo && z < zones[k].hi)
            return k;
    throw OutOfRange("position " + std::to_string(z) + " lies on a zone boundary");
}

const char* to_string(EventLocation l) noexcept
{
    switch (l) {
    case EventLocation::Gas: return "gas";
    case EventLocation::Liquid: return "liquid";
    case EventLocation::InterfaceLeft: return "interface_left";
    case EventLocation::InterfaceRight: return "interface_right";
    case EventLocation::StripEdge: return "strip_edge";
    case EventLocation::Wall: return "wall";
    }
    return "?";
}

const char* to_string(EventClass c) noexcept
{
    switch (c) {
    case EventClass::Collision: return "collision";
    case EventClass::InterfaceHit: return "interface_hit";
    case EventClass::StripEntry: return "strip_entry";
    case EventClass::StripExit: return "strip_exit";
    case EventClass::WallHit: return "wall_hit";
    case EventClass::PistonUpdate: return "piston_update";
    }
    return "?";
}

} // namespace machzero
