#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "ncvx/geom.hpp"
#include "ncvx/interval.hpp"
#include "testutil.hpp"

using namespace ncvx;

TEST_CASE("orientation basics") {
    CHECK(orientation({0, 0}, {1, 0}, {0, 1}) == 1);
    CHECK(orientation({0, 0}, {1, 0}, {2, 0}) == 0);
    CHECK(orientation({0, 0}, {0, 1}, {1, 0}) == -1);
}

TEST_CASE("orientation is antisymmetric in the last two arguments") {
    testutil::Rng rng(7);
    for (int i = 0; i < 500; ++i) {
        Point p = rng.point(-10, 10), q = rng.point(-10, 10), r = rng.point(-10, 10);
        CHECK(orientation(p, q, r) == -orientation(p, r, q));
    }
}

TEST_CASE("segment intersection: crossing point") {
    Segment s{{0, 0}, {2, 0}, Closure::closed};
    Segment t{{1, -1}, {1, 1}, Closure::closed};
    auto is = segment_intersection(s, t);
    REQUIRE(is.kind == SegIntersect::Kind::point);
    CHECK(is.p == Point{1, 0});
}

TEST_CASE("segment intersection: open endpoint excluded") {
    Segment s{{0, 0}, {1, 0}, Closure::open};
    Segment t{{1, 0}, {2, 0}, Closure::closed};
    CHECK(segment_intersection(s, t).is_empty());
}

TEST_CASE("segment intersection: collinear overlap") {
    Segment s{{0, 0}, {2, 0}, Closure::closed};
    Segment t{{1, 0}, {3, 0}, Closure::closed};
    auto is = segment_intersection(s, t);
    REQUIRE(is.kind == SegIntersect::Kind::subsegment);
    CHECK(is.s.a == Point{1, 0});
    CHECK(is.s.b == Point{2, 0});
    CHECK(is.s.closure == Closure::closed);
}

TEST_CASE("segment intersection is symmetric") {
    testutil::Rng rng(11);
    for (int i = 0; i < 300; ++i) {
        Segment s{rng.point(-5, 5), rng.point(-5, 5),
                  static_cast<Closure>(rng.irange(0, 3))};
        Segment t{rng.point(-5, 5), rng.point(-5, 5),
                  static_cast<Closure>(rng.irange(0, 3))};
        if (s.degenerate() || t.degenerate()) continue;
        auto ab = segment_intersection(s, t);
        auto ba = segment_intersection(t, s);
        CHECK(ab.kind == ba.kind);
        if (ab.kind == SegIntersect::Kind::point) CHECK(ab.p == ba.p);
    }
}

TEST_CASE("half-plane left-of and eval") {
    HalfPlane h = halfplane_left_of({0, 0}, {1, 0});  // upper half-plane
    CHECK(h.contains({0, 1}));
    CHECK(h.contains({5, 0}));
    CHECK(!h.contains({0, -1}));
    CHECK(h.complement().contains({0, -1}));
    CHECK(!h.complement().contains({5, 0}));  // open complement
}

TEST_CASE("angle ordering walks counterclockwise from +x") {
    std::vector<Point> dirs{{1, 0}, {1, 1}, {0, 1}, {-1, 1}, {-1, 0}, {-1, -1}, {0, -1}, {1, -1}};
    for (size_t i = 0; i + 1 < dirs.size(); ++i) CHECK(angle_less(dirs[i], dirs[i + 1]));
}

TEST_CASE("interval set algebra") {
    IntervalSet a = IntervalSet::whole(Rat(0), Rat(10));
    IntervalSet b = IntervalSet::single({Rat(2), Rat(3), true, false});
    auto rest = a.subtract(b);
    CHECK(rest.components().size() == 2);
    CHECK(!rest.contains(Rat(2)));
    CHECK(rest.contains(Rat(3)));
    CHECK(rest.contains(Rat(5, 2)) == false);

    IntervalSet c;
    c.add({Rat(0), Rat(1), true, false});
    c.add({Rat(1), Rat(2), true, true});
    CHECK(c.single_component());

    IntervalSet d;
    d.add({Rat(0), Rat(1), true, false});
    d.add({Rat(1), Rat(2), false, true});
    CHECK(d.components().size() == 2);

    CHECK(b.subset_of(a));
    CHECK(!a.subset_of(b));
    CHECK(a.intersect(b).covers({Rat(2), Rat(3), true, false}));
}

TEST_CASE("interval subtraction leaves exact endpoints") {
    IntervalSet a = IntervalSet::whole(Rat(0), Rat(1));
    IntervalSet pt = IntervalSet::single(Interval::point(Rat(1, 2)));
    auto rest = a.subtract(pt);
    CHECK(rest.components().size() == 2);
    CHECK(rest.covers({Rat(0), Rat(1, 2), true, false}));
    CHECK(rest.covers({Rat(1, 2), Rat(1), false, true}));
    CHECK(!rest.contains(Rat(1, 2)));
}

TEST_CASE("closed segment membership respects closure") {
    Segment half{{0, 0}, {2, 0}, Closure::half_open_a};  // (a,b]
    CHECK(!half.contains({0, 0}));
    CHECK(half.contains({2, 0}));
    CHECK(half.contains({1, 0}));
    Segment rev{{0, 0}, {2, 0}, Closure::half_open_b};  // [a,b)
    CHECK(rev.contains({0, 0}));
    CHECK(!rev.contains({2, 0}));
}
