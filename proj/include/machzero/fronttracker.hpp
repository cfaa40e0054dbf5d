#pragma once

#include <cstdint>
#include <functional>
#include <list>
#include <optional>
#include <queue>
#include <random>
#include <vector>

#include "machzero/field.hpp"
#include "machzero/front.hpp"
#include "machzero/glimm.hpp"
#include "machzero/riemann.hpp"
#include "machzero/scenario.hpp"
#include "machzero/trajectory.hpp"

namespace machzero {

/// Outgoing waves smaller than this are dropped.
inline constexpr double kDropSize = 1e-15;
inline constexpr std::size_t kDefaultEventCap = 10'000'000;

class FrontTracker;

struct RunOptions {
    std::size_t event_cap = kDefaultEventCap;
    /// When set, the potential is recomputed after every interaction.
    std::optional<GlimmWeights> weights;
    bool keep_ledger = true;
    /// Called once after initialization and after every processed event.
    std::function<void(const FrontTracker&)> observer;
};

struct GlimmRow {
    double t = 0.0;
    GlimmReport report;
};

enum class EventType { Collision, Boundary, End };

struct Event {
    double t = 0.0;
    EventType type = EventType::End;
    FrontId a = 0;
    FrontId b = 0;
};

struct RunResult {
    Trajectory trajectory;
    std::vector<EventRecord> ledger;
    std::vector<GlimmRow> glimm;
    std::size_t events = 0;
    std::size_t fronts_born = 0;
    std::size_t max_fronts = 0;
    /// Largest rarefaction front outside the strips.
    double max_rarefaction = 0.0;
};

/// Event-driven wave front tracking on a zoned line.
class FrontTracker {
public:
    /// Fronts of the Riemann problems at every breakpoint of the scenario's
    /// initial profile. Throws InadmissibleScenario on vacuum or when the
    /// weighted total variation exceeds the scenario budget.
    explicit FrontTracker(const Scenario& s, RunOptions options = {});

    /// General form used by the piston model: breakpoints falling in solid
    /// zones are ignored; walls start with the velocity `wall_velocity`.
    FrontTracker(Geometry geometry, const Field& initial, double eps, double t_end, std::uint64_t seed,
                 double kappa, double wall_velocity, RunOptions options = {});

    double time() const noexcept { return t_; }
    double t_end() const noexcept { return t_end_; }
    double kappa() const noexcept { return kappa_; }
    const Geometry& geometry() const noexcept { return geo_; }
    const std::list<Front>& fronts() const noexcept { return fronts_; }
    const std::vector<EventRecord>& ledger() const noexcept { return ledger_; }
    std::size_t event_count() const noexcept { return events_; }
    /// Potential of the current front list (requires weights).
    const GlimmReport& glimm() const noexcept { return report_; }

    /// Earliest pending event; End when nothing happens before t_end.
    Event next_event();
    /// Resolves the next event. Returns false once t_end is reached.
    bool step();
    /// Resolves every event up to and including time t, then moves the clock to t.
    void advance_to(double t);

    double wall_velocity() const noexcept { return wall_v_; }
    /// Gas state touching the wall at boundary index b.
    const State& wall_state(std::size_t b) const;
    /// Changes the wall velocity and emits the corresponding waves into the gas.
    void set_wall_velocity(double v);

    /// Runs to t_end and closes every front path.
    RunResult finish();

private:
    using Iter = std::list<Front>::iterator;

    struct Queued {
        double t;
        std::uint64_t seq;
        EventType type;
        FrontId a;
        FrontId b;
        std::uint32_t va;
        std::uint32_t vb;
        bool operator>(const Queued& o) const noexcept { return t > o.t || (t == o.t && seq > o.seq); }
    };

    struct Outgoing {
        WaveFamily family;
        State left;
        State right;
        std::size_t zone;
    };

    void init_from(const Field& initial);
    double speed_in(std::size_t zone, WaveFamily fam, WaveKind kind, const State& l, const State& r) const;
    std::vector<Front> make_fronts(const Outgoing& w, double z, bool keep_single);
    Iter insert_fronts(Iter before, std::vector<Front> fronts);
    void erase_front(Iter it);
    void close_segment(const Front& f, double t1);

    double pair_time(const Front& a, const Front& b) const;
    double boundary_time(const Front& f) const;
    void schedule_pair(Iter a);
    void schedule_boundary(Iter f);
    void schedule_around(Iter first, Iter last);
    void jitter_if_triple(Iter f);
    bool valid(const Queued& q) const;

    void handle_collision(Iter a, Iter b);
    void handle_boundary(Iter a);
    void cross(Iter a, std::size_t boundary);
    void resolve(Iter first, Iter last, double z, std::optional<std::size_t> boundary, std::size_t zone);
    void record(EventRecord e, bool potential_changed);

    EventLocation location_of(std::size_t zone) const;

    Geometry geo_;
    double eps_;
    double t_end_;
    double kappa_;
    RunOptions opt_;
    std::mt19937_64 rng_;

    std::list<Front> fronts_;
    std::vector<Iter> where_;
    std::vector<char> alive_;
    std::priority_queue<Queued, std::vector<Queued>, std::greater<>> queue_;
    std::uint64_t seq_ = 0;
    double t_ = 0.0;

    State background_;
    double wall_v_ = 0.0;
    std::vector<State> wall_states_; // indexed by boundary

    std::vector<Segment> segments_;
    std::vector<EventRecord> ledger_;
    std::vector<GlimmRow> glimm_rows_;
    GlimmReport report_;
    std::size_t events_ = 0;
    std::size_t max_fronts_ = 0;
    double max_rarefaction_ = 0.0;
};

/// Runs a scenario to its final time.
RunResult run(const Scenario& s, const RunOptions& options = {});

} // namespace machzero
