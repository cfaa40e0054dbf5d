#include "machzero/fronttracker.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "machzero/errors.hpp"

namespace machzero {

namespace {

constexpr double kPositionTol = 1e-12;
constexpr double kTripleTol = 1e-13;
constexpr double kJitter = 1e-10;
constexpr double kInf = std::numeric_limits<double>::infinity();

const Scenario& checked(const Scenario& s)
{
    s.validate();
    return s;
}

std::size_t index_of(WaveFamily f) { return f == WaveFamily::One ? 0 : 1; }

} // namespace

FrontTracker::FrontTracker(const Scenario& s, RunOptions options)
    : geo_(Geometry::two_phase(checked(s).gas, s.liquid(), s.m, s.eps)),
      eps_(s.eps),
      t_end_(s.t_end),
      kappa_(s.kappa),
      opt_(std::move(options)),
      rng_(s.seed)
{
    const double w = wtv(s.initial, s.kappa, s.m);
    if (w > s.wtv_budget)
        throw InadmissibleScenario("weighted total variation " + std::to_string(w) + " exceeds the budget " +
                                   std::to_string(s.wtv_budget));
    init_from(s.initial);
}

FrontTracker::FrontTracker(Geometry geometry, const Field& initial, double eps, double t_end,
                           std::uint64_t seed, double kappa, double wall_velocity, RunOptions options)
    : geo_(std::move(geometry)),
      eps_(eps),
      t_end_(t_end),
      kappa_(kappa),
      opt_(std::move(options)),
      rng_(seed),
      wall_v_(wall_velocity)
{
    if (!(eps > 0.0) || !(t_end > 0.0) || !(kappa > 0.0))
        throw DomainError("eps, t_end and kappa must be positive");
    init_from(initial);
}

void FrontTracker::init_from(const Field& initial)
{
    if (initial.values.size() != initial.breaks.size() + 1)
        throw DomainError("initial profile needs one more state than breakpoints");
    background_ = initial.values.front();
    wall_states_.assign(geo_.boundaries.size(), State{});
    for (std::size_t b = 0; b < geo_.boundaries.size(); ++b)
        if (geo_.boundaries[b] == BoundaryKind::Wall)
            wall_states_[b] = initial.at(geo_.zones[b].hi);

    for (std::size_t i = 0; i < initial.breaks.size(); ++i) {
        const double z = initial.breaks[i];
        const std::size_t zone = geo_.locate(z);
        if (geo_.zones[zone].region == Region::Solid)
            continue;
        const State& l = initial.values[i];
        const State& r = initial.values[i + 1];
        if (l == r)
            continue;
        RiemannSolution sol;
        try {
            sol = solve_interior(geo_.zones[zone].medium, l, r);
        } catch (const DomainError& e) {
            throw InadmissibleScenario(std::string("initial jump at z = ") + std::to_string(z) + ": " + e.what());
        }
        const bool one = std::abs(sol.sigma1) >= kDropSize;
        const bool two = std::abs(sol.sigma2) >= kDropSize;
        std::vector<Outgoing> waves;
        if (one && two) {
            waves.push_back({WaveFamily::One, l, sol.middle, zone});
            waves.push_back({WaveFamily::Two, sol.middle, r, zone});
        } else if (one || two) {
            waves.push_back({one ? WaveFamily::One : WaveFamily::Two, l, r, zone});
        }
        for (const Outgoing& w : waves)
            insert_fronts(fronts_.end(), make_fronts(w, z, false));
    }
    for (Iter it = fronts_.begin(); it != fronts_.end(); ++it) {
        schedule_boundary(it);
        schedule_pair(it);
    }
    if (opt_.weights) {
        report_ = upsilon(fronts_, *opt_.weights, kappa_);
        glimm_rows_.push_back({0.0, report_});
    }
    if (opt_.observer)
        opt_.observer(*this);
}

double FrontTracker::speed_in(std::size_t zone, WaveFamily fam, WaveKind kind, const State& l,
                              const State& r) const
{
    const Zone& z = geo_.zones[zone];
    if (z.strip)
        return fam == WaveFamily::One ? -1.0 : 1.0;
    if (kind == WaveKind::Shock)
        return shock_speed(z.medium, fam, l.p, r.p);
    return char_speed(z.medium, fam, l.p);
}

std::vector<Front> FrontTracker::make_fronts(const Outgoing& w, double z, bool keep_single)
{
    const Zone& zone = geo_.zones[w.zone];
    const double sigma = w.right.p - w.left.p;
    const WaveKind kind = classify(w.family, sigma);

    std::vector<std::pair<State, State>> pieces;
    if (kind == WaveKind::Rarefaction && !zone.strip && !keep_single && std::abs(sigma) > eps_) {
        auto wavelets = discretize_rarefaction(zone.medium, w.family, w.left, sigma, eps_);
        wavelets.back().right = w.right;
        for (const Wavelet& piece : wavelets)
            pieces.emplace_back(piece.left, piece.right);
    } else {
        pieces.emplace_back(w.left, w.right);
    }

    std::vector<Front> out;
    out.reserve(pieces.size());
    for (const auto& [l, r] : pieces) {
        Front f;
        f.family = w.family;
        f.sigma = r.p - l.p;
        f.kind = classify(w.family, f.sigma);
        f.left = l;
        f.right = r;
        f.zone = w.zone;
        f.region = zone.region;
        f.in_strip = zone.strip;
        f.speed = speed_in(w.zone, f.family, f.kind, l, r);
        f.z_ref = z;
        f.t_ref = t_;
        f.birth_time = t_;
        if (f.kind == WaveKind::Rarefaction && !f.in_strip)
            max_rarefaction_ = std::max(max_rarefaction_, std::abs(f.sigma));
        out.push_back(f);
    }
    return out;
}

FrontTracker::Iter FrontTracker::insert_fronts(Iter before, std::vector<Front> fronts)
{
    Iter first = before;
    bool any = false;
    for (Front& f : fronts) {
        f.id = static_cast<FrontId>(where_.size());
        const Iter it = fronts_.insert(before, f);
        where_.push_back(it);
        alive_.push_back(1);
        if (!any) {
            first = it;
            any = true;
        }
    }
    max_fronts_ = std::max(max_fronts_, fronts_.size());
    return first;
}

void FrontTracker::close_segment(const Front& f, double t1)
{
    if (!(t1 > f.t_ref))
        return;
    Segment s;
    s.id = f.id;
    s.family = f.family;
    s.kind = f.kind;
    s.sigma = f.sigma;
    s.left = f.left;
    s.right = f.right;
    s.t0 = f.t_ref;
    s.t1 = t1;
    s.z0 = f.z_ref;
    s.speed = f.speed;
    s.zone = f.zone;
    s.region = f.region;
    segments_.push_back(s);
}

void FrontTracker::erase_front(Iter it)
{
    close_segment(*it, t_);
    alive_[it->id] = 0;
    fronts_.erase(it);
}

double FrontTracker::pair_time(const Front& a, const Front& b) const
{
    if (a.zone != b.zone || !(a.speed > b.speed))
        return kInf;
    const double gap = b.position(t_) - a.position(t_);
    return t_ + std::max(gap, 0.0) / (a.speed - b.speed);
}

double FrontTracker::boundary_time(const Front& f) const
{
    const Zone& z = geo_.zones[f.zone];
    const double pos = f.position(t_);
    if (f.speed > 0.0 && std::isfinite(z.hi))
        return t_ + std::max(z.hi - pos, 0.0) / f.speed;
    if (f.speed < 0.0 && std::isfinite(z.lo))
        return t_ + std::max(pos - z.lo, 0.0) / -f.speed;
    return kInf;
}

void FrontTracker::schedule_pair(Iter a)
{
    if (a == fronts_.end())
        return;
    const Iter b = std::next(a);
    if (b == fronts_.end())
        return;
    const double t = pair_time(*a, *b);
    if (t <= t_end_)
        queue_.push({t, seq_++, EventType::Collision, a->id, b->id, a->version, b->version});
}

void FrontTracker::schedule_boundary(Iter f)
{
    const double t = boundary_time(*f);
    if (t <= t_end_)
        queue_.push({t, seq_++, EventType::Boundary, f->id, f->id, f->version, f->version});
}

void FrontTracker::schedule_around(Iter first, Iter last)
{
    const Iter stop = std::next(last);
    if (first != fronts_.begin())
        schedule_pair(std::prev(first));
    for (Iter it = first; it != stop; ++it) {
        schedule_boundary(it);
        schedule_pair(it);
    }
}

void FrontTracker::jitter_if_triple(Iter f)
{
    if (geo_.zones[f->zone].strip)
        return;
    const bool has_prev = f != fronts_.begin();
    const Iter next = std::next(f);
    const bool has_next = next != fronts_.end();
    const double tl = has_prev ? pair_time(*std::prev(f), *f) : kInf;
    const double tr = has_next ? pair_time(*f, *next) : kInf;
    double tll = kInf, trr = kInf;
    if (has_prev && std::prev(f) != fronts_.begin())
        tll = pair_time(*std::prev(f, 2), *std::prev(f));
    if (has_next && std::next(next) != fronts_.end())
        trr = pair_time(*next, *std::next(next));
    const bool triple = (std::isfinite(tl) && (std::abs(tl - tll) < kTripleTol || std::abs(tl - tr) < kTripleTol)) ||
                        (std::isfinite(tr) && std::abs(tr - trr) < kTripleTol);
    if (triple) {
        std::uniform_real_distribution<double> jitter(-kJitter, kJitter);
        f->speed += jitter(rng_);
    }
}

bool FrontTracker::valid(const Queued& q) const
{
    if (!alive_[q.a] || where_[q.a]->version != q.va)
        return false;
    if (q.type != EventType::Collision)
        return true;
    if (!alive_[q.b] || where_[q.b]->version != q.vb)
        return false;
    return std::next(where_[q.a]) == where_[q.b];
}

Event FrontTracker::next_event()
{
    while (!queue_.empty() && !valid(queue_.top()))
        queue_.pop();
    if (queue_.empty() || queue_.top().t > t_end_)
        return Event{t_end_, EventType::End, 0, 0};
    const Queued& q = queue_.top();
    return Event{q.t, q.type, q.a, q.b};
}

bool FrontTracker::step()
{
    const Event ev = next_event();
    if (ev.type == EventType::End) {
        t_ = t_end_;
        return false;
    }
    queue_.pop();
    if (++events_ > opt_.event_cap)
        throw EventCapExceeded("event cap " + std::to_string(opt_.event_cap) + " reached at t = " +
                               std::to_string(t_) + " with " + std::to_string(fronts_.size()) + " fronts");
    t_ = std::max(t_, ev.t);
    if (ev.type == EventType::Collision)
        handle_collision(where_[ev.a], where_[ev.b]);
    else
        handle_boundary(where_[ev.a]);
    if (opt_.observer)
        opt_.observer(*this);
    return true;
}

void FrontTracker::advance_to(double t)
{
    for (;;) {
        const Event ev = next_event();
        if (ev.type == EventType::End || ev.t > t)
            break;
        step();
    }
    t_ = std::max(t_, std::min(t, t_end_));
}

void FrontTracker::handle_collision(Iter a, Iter b)
{
    double z = 0.5 * (a->position(t_) + b->position(t_));
    const std::size_t k = a->zone;
    const Zone& zone = geo_.zones[k];
    std::optional<std::size_t> boundary;
    if (k + 1 < geo_.zones.size() && std::abs(z - zone.hi) <= kPositionTol) {
        boundary = k;
        z = zone.hi;
    } else if (k > 0 && std::abs(z - zone.lo) <= kPositionTol) {
        boundary = k - 1;
        z = zone.lo;
    }
    Iter first = a, last = b;
    while (first != fronts_.begin()) {
        const Iter p = std::prev(first);
        if (std::abs(p->position(t_) - z) > kPositionTol || !(p->speed > first->speed))
            break;
        first = p;
    }
    for (Iter n = std::next(last); n != fronts_.end(); n = std::next(last)) {
        if (std::abs(n->position(t_) - z) > kPositionTol || !(n->speed < last->speed))
            break;
        last = n;
    }
    resolve(first, last, z, boundary, k);
}

void FrontTracker::handle_boundary(Iter a)
{
    const std::size_t b = a->speed > 0.0 ? a->zone : a->zone - 1;
    const double z = geo_.zones[b].hi;
    Iter first = a, last = a;
    while (first != fronts_.begin()) {
        const Iter p = std::prev(first);
        if (std::abs(p->position(t_) - z) > kPositionTol || !(p->speed > first->speed))
            break;
        first = p;
    }
    for (Iter n = std::next(last); n != fronts_.end(); n = std::next(last)) {
        if (std::abs(n->position(t_) - z) > kPositionTol || !(n->speed < last->speed))
            break;
        last = n;
    }
    if (first == last && geo_.boundaries[b] == BoundaryKind::StripEdge)
        cross(a, b);
    else
        resolve(first, last, z, b, a->zone);
}

void FrontTracker::cross(Iter a, std::size_t boundary)
{
    const std::size_t to = a->family == WaveFamily::One ? boundary : boundary + 1;
    const bool exiting = geo_.zones[a->zone].strip && !geo_.zones[to].strip;
    const double z = geo_.zones[boundary].hi;

    EventRecord e;
    e.t = t_;
    e.z = z;
    e.location = EventLocation::StripEdge;
    e.kind = exiting ? EventClass::StripExit : EventClass::StripEntry;
    e.incoming.push_back({a->family, a->sigma});

    if (exiting && a->kind == WaveKind::Rarefaction && std::abs(a->sigma) > eps_) {
        const Outgoing w{a->family, a->left, a->right, to};
        const Iter next = std::next(a);
        erase_front(a);
        std::vector<Front> pieces = make_fronts(w, z, false);
        for (const Front& f : pieces)
            e.outgoing.push_back({f.family, f.sigma});
        const Iter first = insert_fronts(next, std::move(pieces));
        const Iter last = std::prev(next);
        jitter_if_triple(first);
        if (last != first)
            jitter_if_triple(last);
        schedule_around(first, last);
    } else {
        close_segment(*a, t_);
        a->zone = to;
        a->region = geo_.zones[to].region;
        a->in_strip = geo_.zones[to].strip;
        a->speed = speed_in(to, a->family, a->kind, a->left, a->right);
        a->z_ref = z;
        a->t_ref = t_;
        ++a->version;
        e.outgoing.push_back({a->family, a->sigma});
        if (exiting)
            jitter_if_triple(a);
        schedule_around(a, a);
    }
    record(std::move(e), false);
}

void FrontTracker::resolve(Iter first, Iter last, double z, std::optional<std::size_t> boundary,
                           std::size_t zone)
{
    EventRecord e;
    e.t = t_;
    e.z = z;
    const State l = first->left;
    const State r = last->right;
    const Iter stop = std::next(last);
    bool has[2] = {false, false};
    double sum_in = 0.0;
    for (Iter it = first; it != stop; ++it) {
        e.incoming.push_back({it->family, it->sigma});
        has[index_of(it->family)] = true;
        sum_in += it->sigma;
    }

    auto waves_of = [&](const RiemannSolution& sol, std::size_t z1, std::size_t z2) {
        std::vector<Outgoing> w;
        const bool one = std::abs(sol.sigma1) >= kDropSize;
        const bool two = std::abs(sol.sigma2) >= kDropSize;
        if (one && two) {
            w.push_back({WaveFamily::One, l, sol.middle, z1});
            w.push_back({WaveFamily::Two, sol.middle, r, z2});
        } else if (one) {
            w.push_back({WaveFamily::One, l, r, z1});
        } else if (two) {
            w.push_back({WaveFamily::Two, l, r, z2});
        }
        return w;
    };

    std::vector<Outgoing> waves;
    RiemannSolution sol;
    if (boundary) {
        const std::size_t lz = *boundary;
        const std::size_t rz = lz + 1;
        const Zone& left_zone = geo_.zones[lz];
        const Zone& right_zone = geo_.zones[rz];
        switch (geo_.boundaries[lz]) {
        case BoundaryKind::Interface:
            sol = solve_between(left_zone.medium, right_zone.medium, l, r, 1.0);
            e.location = left_zone.region == Region::LeftGas ? EventLocation::InterfaceLeft
                                                              : EventLocation::InterfaceRight;
            e.kind = EventClass::InterfaceHit;
            waves = waves_of(sol, lz, rz);
            break;
        case BoundaryKind::StripEdge:
            sol = solve_interior(left_zone.medium, l, r);
            e.location = location_of(lz);
            e.kind = EventClass::Collision;
            waves = waves_of(sol, lz, rz);
            break;
        case BoundaryKind::Wall:
            e.location = EventLocation::Wall;
            e.kind = EventClass::WallHit;
            if (right_zone.region == Region::Solid) {
                sol = solve_piston_boundary(PistonSide::LeftGas, left_zone.medium.base(), l, wall_v_);
                if (std::abs(sol.sigma1) >= kDropSize)
                    waves.push_back({WaveFamily::One, l, sol.middle, lz});
            } else {
                sol = solve_piston_boundary(PistonSide::RightGas, right_zone.medium.base(), r, wall_v_);
                if (std::abs(sol.sigma2) >= kDropSize)
                    waves.push_back({WaveFamily::Two, sol.middle, r, rz});
            }
            wall_states_[lz] = sol.middle;
            break;
        }
    } else {
        sol = solve_interior(geo_.zones[zone].medium, l, r);
        e.location = location_of(zone);
        e.kind = EventClass::Collision;
        waves = waves_of(sol, zone, zone);
    }
    e.sigma1 = sol.sigma1;
    e.sigma2 = sol.sigma2;

    std::vector<Front> created;
    for (const Outgoing& w : waves) {
        std::vector<Front> fs = make_fronts(w, z, has[index_of(w.family)]);
        created.insert(created.end(), fs.begin(), fs.end());
    }
    double sum_out = 0.0;
    for (const Front& f : created) {
        e.outgoing.push_back({f.family, f.sigma});
        sum_out += f.sigma;
    }
    e.d_sigma_sum = sum_out - sum_in;

    for (Iter it = first; it != stop;) {
        const Iter n = std::next(it);
        erase_front(it);
        it = n;
    }
    if (created.empty()) {
        if (stop != fronts_.begin())
            schedule_pair(std::prev(stop));
    } else {
        const Iter a = insert_fronts(stop, std::move(created));
        const Iter b = std::prev(stop);
        jitter_if_triple(a);
        if (b != a)
            jitter_if_triple(b);
        schedule_around(a, b);
    }
    record(std::move(e), true);
}

void FrontTracker::record(EventRecord e, bool potential_changed)
{
    if (opt_.weights) {
        if (potential_changed) {
            const GlimmReport next = upsilon(fronts_, *opt_.weights, kappa_);
            e.d_upsilon = next.upsilon - report_.upsilon;
            report_ = next;
            glimm_rows_.push_back({t_, report_});
        }
        e.upsilon = report_.upsilon;
    }
    if (opt_.keep_ledger)
        ledger_.push_back(std::move(e));
}

EventLocation FrontTracker::location_of(std::size_t zone) const
{
    return geo_.zones[zone].region == Region::Liquid ? EventLocation::Liquid : EventLocation::Gas;
}

const State& FrontTracker::wall_state(std::size_t b) const
{
    if (b >= geo_.boundaries.size() || geo_.boundaries[b] != BoundaryKind::Wall)
        throw OutOfRange("boundary " + std::to_string(b) + " is not a wall");
    return wall_states_[b];
}

void FrontTracker::set_wall_velocity(double v)
{
    wall_v_ = v;
    for (std::size_t b = 0; b < geo_.boundaries.size(); ++b) {
        if (geo_.boundaries[b] != BoundaryKind::Wall)
            continue;
        const std::size_t lz = b, rz = b + 1;
        const bool gas_left = geo_.zones[rz].region == Region::Solid;
        const GammaLaw& gas = geo_.zones[gas_left ? lz : rz].medium.base();
        const State g = wall_states_[b];
        const RiemannSolution sol =
            solve_piston_boundary(gas_left ? PistonSide::LeftGas : PistonSide::RightGas, gas, g, v);
        wall_states_[b] = sol.middle;

        EventRecord e;
        e.t = t_;
        e.z = geo_.zones[b].hi;
        e.location = EventLocation::Wall;
        e.kind = EventClass::PistonUpdate;
        e.sigma1 = sol.sigma1;
        e.sigma2 = sol.sigma2;
        const double sigma = gas_left ? sol.sigma1 : sol.sigma2;
        if (std::abs(sigma) >= kDropSize) {
            const Outgoing w = gas_left ? Outgoing{WaveFamily::One, g, sol.middle, lz}
                                        : Outgoing{WaveFamily::Two, sol.middle, g, rz};
            std::vector<Front> fs = make_fronts(w, e.z, false);
            for (const Front& f : fs)
                e.outgoing.push_back({f.family, f.sigma});
            const Iter pos = std::find_if(fronts_.begin(), fronts_.end(), [&](const Front& f) {
                return gas_left ? f.zone > lz : f.zone >= rz;
            });
            const Iter first = insert_fronts(pos, std::move(fs));
            schedule_around(first, std::prev(pos));
        }
        record(std::move(e), false);
    }
}

RunResult FrontTracker::finish()
{
    while (step()) {
    }
    t_ = t_end_;
    for (const Front& f : fronts_)
        close_segment(f, t_end_);
    RunResult r;
    r.trajectory = Trajectory(std::move(segments_), background_, t_end_);
    segments_.clear();
    r.ledger = std::move(ledger_);
    r.glimm = std::move(glimm_rows_);
    r.events = events_;
    r.fronts_born = where_.size();
    r.max_fronts = max_fronts_;
    r.max_rarefaction = max_rarefaction_;
    return r;
}

RunResult run(const Scenario& s, const RunOptions& options)
{
    FrontTracker tracker(s, options);
    return tracker.finish();
}

} // namespace machzero
