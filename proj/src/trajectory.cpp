#include "machzero/trajectory.hpp"

#include <algorithm>
#include <string>

#include "machzero/errors.hpp"

namespace machzero {

Trajectory::Trajectory(std::vector<Segment> segments, State background, double t_end)
    : segments_(std::move(segments)), background_(background), t_end_(t_end)
{
    std::stable_sort(segments_.begin(), segments_.end(),
                     [](const Segment& a, const Segment& b) { return a.t0 < b.t0; });
}

Field Trajectory::sample(double t) const
{
    if (!(t >= 0.0) || t > t_end_)
        throw OutOfRange("sample time " + std::to_string(t) + " outside [0, t_end]");
    struct Alive {
        double z;
        double speed;
        const Segment* seg;
    };
    std::vector<Alive> alive;
    const auto stop = std::upper_bound(segments_.begin(), segments_.end(), t,
                                       [](double x, const Segment& s) { return x < s.t0; });
    for (auto it = segments_.begin(); it != stop; ++it) {
        const bool live = t < it->t1 || (t == t_end_ && it->t1 == t_end_);
        if (live && it->t0 < it->t1)
            alive.push_back({it->position(t), it->speed, &*it});
    }
    // Fronts sharing a position at t are about to separate: slower ones first.
    std::stable_sort(alive.begin(), alive.end(), [](const Alive& a, const Alive& b) {
        return a.z < b.z || (a.z == b.z && a.speed < b.speed);
    });
    Field f;
    if (alive.empty()) {
        f.values.push_back(background_);
        return f;
    }
    f.values.push_back(alive.front().seg->left);
    for (const Alive& a : alive) {
        f.breaks.push_back(a.z);
        f.values.push_back(a.seg->right);
    }
    return f;
}

Field Trajectory::trace(double z) const
{
    struct Departure {
        double t;
        double speed;
        const Segment* seg;
    };
    std::vector<Departure> dep;
    for (const Segment& s : segments_) {
        if (!(s.t1 > s.t0))
            continue;
        const double z1 = s.position(s.t1);
        const bool hit = s.speed > 0.0 ? (s.z0 <= z && z <= z1) : (z1 <= z && z <= s.z0);
        if (!hit)
            continue;
        double tc = s.z0 == z ? s.t0 : s.t0 + (z - s.z0) / s.speed;
        tc = std::clamp(tc, s.t0, s.t1);
        if (tc < s.t1)
            dep.push_back({tc, s.speed, &s});
    }
    std::stable_sort(dep.begin(), dep.end(), [](const Departure& a, const Departure& b) { return a.t < b.t; });

    Field f;
    f.values.push_back(sample(0.0).at(z));
    std::size_t i = 0;
    while (i < dep.size()) {
        std::size_t j = i;
        while (j < dep.size() && dep[j].t == dep[i].t)
            ++j;
        // The state at z just after the crossings sits between the slowest
        // right-moving and the fastest left-moving departure.
        const Departure* right_mover = nullptr;
        const Departure* left_mover = nullptr;
        for (std::size_t k = i; k < j; ++k) {
            if (dep[k].speed > 0.0) {
                if (!right_mover || dep[k].speed < right_mover->speed)
                    right_mover = &dep[k];
            } else if (!left_mover || dep[k].speed > left_mover->speed) {
                left_mover = &dep[k];
            }
        }
        const State& next = right_mover ? right_mover->seg->left : left_mover->seg->right;
        if (dep[i].t == 0.0 && f.breaks.empty())
            f.values.back() = next;
        else {
            f.breaks.push_back(dep[i].t);
            f.values.push_back(next);
        }
        i = j;
    }
    return f;
}

} // namespace machzero
