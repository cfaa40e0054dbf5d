#pragma once

#include <vector>

#include "machzero/field.hpp"
#include "machzero/front.hpp"

namespace machzero {

/// Front paths of one connected fluid domain over [0, t_end].
class Trajectory {
public:
    Trajectory() = default;
    /// `background` is the state used when no front is alive.
    Trajectory(std::vector<Segment> segments, State background, double t_end);

    double t_end() const noexcept { return t_end_; }
    const std::vector<Segment>& segments() const noexcept { return segments_; }
    const State& background() const noexcept { return background_; }

    /// (p, v) profile at time t, right-continuous in time. Throws OutOfRange.
    Field sample(double t) const;

    /// Time series of (p, v) at position z: breaks are times, values hold on
    /// [breaks[i-1], breaks[i]).
    Field trace(double z) const;

private:
    std::vector<Segment> segments_; // sorted by t0
    State background_;
    double t_end_ = 0.0;
};

} // namespace machzero
