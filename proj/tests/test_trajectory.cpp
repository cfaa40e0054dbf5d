#include <doctest.h>

#include "machzero/errors.hpp"
#include "machzero/trajectory.hpp"

using namespace machzero;

namespace {

Segment seg(FrontId id, double t0, double t1, double z0, double speed, State l, State r)
{
    Segment s;
    s.id = id;
    s.t0 = t0;
    s.t1 = t1;
    s.z0 = z0;
    s.speed = speed;
    s.left = l;
    s.right = r;
    s.sigma = r.p - l.p;
    return s;
}

} // namespace

TEST_CASE("sampling and tracing a single moving front")
{
    const State a{1.0, 0.0};
    const State b{1.1, 0.1};
    const Trajectory tr({seg(0, 0.0, 2.0, 0.0, 1.0, a, b)}, a, 2.0);

    const Field f = tr.sample(1.0);
    REQUIRE(f.breaks.size() == 1);
    CHECK(f.breaks[0] == 1.0);
    CHECK(f.values[0] == a);
    CHECK(f.values[1] == b);
    CHECK(tr.sample(2.0).breaks.size() == 1);
    CHECK_THROWS_AS(tr.sample(2.5), OutOfRange);
    CHECK_THROWS_AS(tr.sample(-0.1), OutOfRange);

    // Front passes z = 0.5 at t = 0.5: state b before, a after.
    const Field at = tr.trace(0.5);
    REQUIRE(at.breaks.size() == 1);
    CHECK(at.breaks[0] == doctest::Approx(0.5));
    CHECK(at.values[0] == b);
    CHECK(at.values[1] == a);
}

TEST_CASE("a front ending mid-run disappears from later samples")
{
    const State a{1.0, 0.0};
    const State b{1.1, 0.1};
    const Trajectory tr({seg(0, 0.0, 1.0, 0.0, -1.0, a, b)}, a, 2.0);
    CHECK(tr.sample(0.5).breaks.size() == 1);
    const Field late = tr.sample(1.5);
    CHECK(late.breaks.empty());
    CHECK(late.values.front() == a);
}

TEST_CASE("empty trajectory samples the background")
{
    const State a{1.0, 0.0};
    const Trajectory tr({}, a, 1.0);
    CHECK(tr.sample(0.3).values.size() == 1);
    CHECK(tr.trace(3.0).values.front() == a);
}
