#pragma once

#include <cstdint>
#include <limits>
#include <vector>

#include "machzero/eos.hpp"
#include "machzero/laxwaves.hpp"

namespace machzero {

using FrontId = std::uint32_t;

/// Part of the line a zone belongs to. The interaction potentials are summed
/// separately over the three fluid regions.
enum class Region { LeftGas, Liquid, RightGas, Solid };

enum class BoundaryKind { StripEdge, Interface, Wall };

struct Zone {
    double lo = -std::numeric_limits<double>::infinity();
    double hi = std::numeric_limits<double>::infinity();
    Medium medium;
    bool strip = false;
    Region region = Region::LeftGas;
};

/// Partition of the line into zones; boundaries[k] separates zones[k] and
/// zones[k + 1] and sits at zones[k].hi.
struct Geometry {
    std::vector<Zone> zones;
    std::vector<BoundaryKind> boundaries;

    /// Gas | liquid | gas with strips of width eps^2 on both sides of z = 0 and z = m.
    static Geometry two_phase(const GammaLaw& gas, const LiquidEos& liquid, double m, double eps);
    /// Two gas half-lines closed by rigid walls at z = 0 and z = m.
    static Geometry pistons(const GammaLaw& gas, double m);

    /// Zone whose open interior contains z. Throws OutOfRange on a boundary.
    std::size_t locate(double z) const;
};

/// A discontinuity moving with constant speed between events.
struct Front {
    FrontId id = 0;
    WaveFamily family = WaveFamily::One;
    WaveKind kind = WaveKind::Shock;
    double sigma = 0.0;
    State left;
    State right;
    double z_ref = 0.0;
    double t_ref = 0.0;
    double speed = 0.0;
    std::size_t zone = 0;
    Region region = Region::LeftGas;
    bool in_strip = false;
    double birth_time = 0.0;
    std::uint32_t version = 0;

    double position(double t) const noexcept { return z_ref + speed * (t - t_ref); }
};

/// Straight piece of a front's path in the (t, z) plane.
struct Segment {
    FrontId id = 0;
    WaveFamily family = WaveFamily::One;
    WaveKind kind = WaveKind::Shock;
    double sigma = 0.0;
    State left;
    State right;
    double t0 = 0.0;
    double t1 = 0.0;
    double z0 = 0.0;
    double speed = 0.0;
    std::size_t zone = 0;
    Region region = Region::LeftGas;

    double position(double t) const noexcept { return z0 + speed * (t - t0); }
};

enum class EventLocation { Gas, Liquid, InterfaceLeft, InterfaceRight, StripEdge, Wall };
enum class EventClass { Collision, InterfaceHit, StripEntry, StripExit, WallHit, PistonUpdate };

const char* to_string(EventLocation l) noexcept;
const char* to_string(EventClass c) noexcept;

struct WaveRecord {
    WaveFamily family = WaveFamily::One;
    double sigma = 0.0;
};

struct EventRecord {
    double t = 0.0;
    double z = 0.0;
    EventLocation location = EventLocation::Gas;
    EventClass kind = EventClass::Collision;
    std::vector<WaveRecord> incoming;
    std::vector<WaveRecord> outgoing; // after fan splitting
    double sigma1 = 0.0;              // Riemann solution before splitting
    double sigma2 = 0.0;
    double d_sigma_sum = 0.0; // sum of outgoing minus sum of incoming sizes
    double upsilon = 0.0;     // after the event, when tracked
    double d_upsilon = 0.0;
};

} // namespace machzero
