#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "ncvx/polygon.hpp"
#include "testutil.hpp"

#include <algorithm>

using namespace ncvx;

namespace {

Polygon unit_square() {
    return Polygon::make({{0, 0}, {1, 0}, {1, 1}, {0, 1}});
}

// independent kernel oracle: candidate vertices from all pairwise inner
// half-plane line crossings plus polygon vertices, filtered by every
// constraint; the kernel is the hull of the survivors
Hull kernel_oracle(const Polygon& P) {
    std::vector<HalfPlane> hs;
    for (size_t i = 0; i < P.size(); ++i) hs.push_back(halfplane_left_of(P.vertex(i), P.vertex(i + 1)));
    std::vector<Point> cands = P.verts();
    for (size_t i = 0; i < hs.size(); ++i)
        for (size_t j = i + 1; j < hs.size(); ++j) {
            // boundary lines a x + b y = c
            Rat den(hs[i].a * hs[j].b - hs[j].a * hs[i].b);
            if (den == 0) continue;
            Rat x((hs[i].c * hs[j].b - hs[j].c * hs[i].b) / den);
            Rat y((hs[i].a * hs[j].c - hs[j].a * hs[i].c) / den);
            cands.push_back({x, y});
        }
    std::vector<Point> keep;
    for (const auto& p : cands) {
        bool ok = true;
        for (const auto& h : hs)
            if (!h.contains(p)) {
                ok = false;
                break;
            }
        if (ok) keep.push_back(p);
    }
    return convex_hull(keep);
}

bool same_hull(const Hull& a, const Hull& b) {
    if (a.dim() != b.dim()) return false;
    auto pa = a.points(), pb = b.points();
    std::sort(pa.begin(), pa.end());
    std::sort(pb.begin(), pb.end());
    return pa == pb;
}

} // namespace

TEST_CASE("point in polygon") {
    Polygon sq = unit_square();
    CHECK(sq.locate({Rat(1, 2), Rat(1, 2)}) == Polygon::Where::interior);
    CHECK(sq.locate({0, 0}) == Polygon::Where::boundary);
    CHECK(sq.locate({5, 5}) == Polygon::Where::exterior);
    CHECK(sq.locate({Rat(1, 2), Rat(0)}) == Polygon::Where::boundary);
}

TEST_CASE("normal form merges collinear runs and fixes orientation") {
    Polygon P = Polygon::make({{0, 1}, {1, 1}, {1, 0}, {Rat(1, 2), Rat(0)}, {0, 0}});  // clockwise input
    CHECK(P.size() == 4);
    CHECK(P.area() == 1);
    CHECK(P.is_convex());
}

TEST_CASE("polygon area") {
    CHECK(unit_square().area() == 1);
    Polygon tri = Polygon::make({{0, 0}, {1, 0}, {0, 1}});
    CHECK(tri.area() == Rat(1, 2));
}

TEST_CASE("convex hull shapes") {
    Hull sq = convex_hull({{0, 0}, {1, 0}, {1, 1}, {0, 1}, {Rat(1, 2), Rat(1, 2)}});
    REQUIRE(sq.dim() == 2);
    CHECK(sq.poly().size() == 4);
    CHECK(sq.poly().area() == 1);

    Hull seg = convex_hull({{0, 0}, {2, 2}, {1, 1}});
    REQUIRE(seg.dim() == 1);
    CHECK(seg.seg().a == Point{0, 0});
    CHECK(seg.seg().b == Point{2, 2});

    Hull pt = convex_hull({{0, 0}});
    CHECK(pt.dim() == 0);
}

TEST_CASE("hull output is convex") {
    testutil::Rng rng(3);
    for (int t = 0; t < 50; ++t) {
        std::vector<Point> pts;
        for (int i = 0; i < 12; ++i) pts.push_back(rng.point(-8, 8));
        Hull h = convex_hull(pts);
        if (h.dim() == 2) CHECK(h.poly().is_convex());
    }
}

TEST_CASE("clip unit square") {
    Polygon sq = unit_square();
    auto pieces = clip(sq, {1, 0, Rat(1, 2), true});  // x <= 1/2
    REQUIRE(pieces.size() == 1);
    CHECK(pieces[0].area() == Rat(1, 2));
    CHECK(pieces[0].locate({Rat(1, 4), Rat(1, 2)}) == Polygon::Where::interior);

    auto noop = clip(sq, {1, 0, Rat(2), true});  // x <= 2
    REQUIRE(noop.size() == 1);
    CHECK(noop[0].area() == 1);

    CHECK(clip(sq, {1, 0, Rat(-1), true}).empty());
}

TEST_CASE("clip splits a U shape into two pieces") {
    // U-shape opening upward; clip to the part above y = 2
    Polygon U = Polygon::make(
        {{0, 0}, {5, 0}, {5, 4}, {4, 4}, {4, 1}, {1, 1}, {1, 4}, {0, 4}});
    auto top = clip(U, {0, -1, Rat(-2), true});  // -y <= -2  <=>  y >= 2
    CHECK(top.size() == 2);
    Rat sum(0);
    for (const auto& p : top) sum += p.area();
    CHECK(sum == Rat(4));
}

TEST_CASE("clip area additivity on random star polygons") {
    testutil::Rng rng(17);
    for (int t = 0; t < 60; ++t) {
        Polygon P = testutil::random_star_polygon(rng, 8, 6);
        Point a = rng.point(-3, 3), b = rng.point(-3, 3);
        if (a == b) continue;
        HalfPlane h = halfplane_left_of(a, b);
        Rat left(0), right(0);
        for (const auto& q : clip(P, h)) left += q.area();
        for (const auto& q : clip(P, h.complement().closure())) right += q.area();
        CHECK(left + right == P.area());
    }
}

TEST_CASE("clip is idempotent") {
    testutil::Rng rng(23);
    for (int t = 0; t < 40; ++t) {
        Polygon P = testutil::random_star_polygon(rng, 7, 5);
        HalfPlane h = halfplane_left_of(rng.point(-2, 2), rng.point(-3, 3));
        if (h.a == 0 && h.b == 0) continue;
        for (const auto& q : clip(P, h)) {
            auto again = clip(q, h);
            REQUIRE(again.size() == 1);
            CHECK(again[0].area() == q.area());
        }
    }
}

TEST_CASE("kernel of a convex polygon is the polygon") {
    Polygon pent = Polygon::make({{0, 0}, {4, 0}, {5, 3}, {2, 5}, {-1, 3}});
    Hull k = polygon_kernel(pent);
    REQUIRE(k.dim() == 2);
    CHECK(k.poly().area() == pent.area());
}

TEST_CASE("kernel of two squares pinched at a corner is that corner") {
    Polygon bow = Polygon::make_weak(
        {{0, 0}, {1, 0}, {1, 1}, {2, 1}, {2, 2}, {1, 2}, {1, 1}, {0, 1}});
    CHECK(bow.weakly_simple());
    Hull k = polygon_kernel(bow);
    REQUIRE(k.dim() == 0);
    CHECK(k.pt() == Point{1, 1});
}

TEST_CASE("kernel of the L hexomino is the inner rectangle") {
    Polygon L = Polygon::make({{0, 0}, {2, 0}, {2, 1}, {1, 1}, {1, 2}, {0, 2}});
    Hull k = polygon_kernel(L);
    REQUIRE(k.dim() == 2);
    CHECK(same_hull(k, convex_hull({{0, 0}, {1, 0}, {1, 1}, {0, 1}})));
    CHECK(same_hull(k, kernel_oracle(L)));
}

TEST_CASE("kernel matches the brute-force oracle on random star polygons") {
    testutil::Rng rng(31);
    for (int t = 0; t < 40; ++t) {
        Polygon P = testutil::random_star_polygon(rng, 9, 6);
        CHECK(same_hull(polygon_kernel(P), kernel_oracle(P)));
    }
}

TEST_CASE("kernel witnesses see every vertex") {
    testutil::Rng rng(37);
    for (int t = 0; t < 25; ++t) {
        Polygon P = testutil::random_star_polygon(rng, 8, 5);
        Hull k = polygon_kernel(P);
        if (k.dim() < 0) continue;
        for (const auto& w : k.points())
            for (const auto& v : P.verts()) CHECK(segment_in_polygon(P, w, v));
    }
}

TEST_CASE("segment-in-polygon handles boundary travel") {
    Polygon sq = unit_square();
    CHECK(segment_in_polygon(sq, {0, 0}, {1, 0}));
    CHECK(segment_in_polygon(sq, {Rat(1, 4), Rat(0)}, {Rat(3, 4), Rat(0)}));
    CHECK(!segment_in_polygon(sq, {0, 0}, {2, 0}));
    CHECK(open_segment_in_polygon(sq, {0, 0}, {1, 1}));
}

TEST_CASE("union area of overlapping squares") {
    Polygon a = unit_square();
    Polygon b = Polygon::make({{Rat(1, 2), Rat(0)}, {Rat(3, 2), Rat(0)}, {Rat(3, 2), Rat(1)}, {Rat(1, 2), Rat(1)}});
    CHECK(union_area({a, b}) == Rat(3, 2));
    CHECK(union_area({a}) == 1);
    Polygon c = Polygon::make({{3, 3}, {4, 3}, {4, 4}, {3, 4}});
    CHECK(union_area({a, c}) == 2);
}

TEST_CASE("union area equals clip decomposition on random data") {
    testutil::Rng rng(41);
    for (int t = 0; t < 25; ++t) {
        Polygon P = testutil::random_convex_polygon(rng, 4, 6);
        HalfPlane h = halfplane_left_of(rng.point(-2, 2), rng.point(-3, 3));
        auto l = clip(P, h);
        auto r = clip(P, h.complement().closure());
        std::vector<Polygon> parts;
        for (auto& q : l) parts.push_back(q);
        for (auto& q : r) parts.push_back(q);
        if (parts.empty()) continue;
        CHECK(union_area(parts) == P.area());
        parts.push_back(P);  // adding the whole changes nothing
        CHECK(union_area(parts) == P.area());
    }
}

TEST_CASE("boundary path walks counterclockwise") {
    Polygon sq = unit_square();
    auto path = boundary_path_ccw(sq, {Rat(1, 2), Rat(0)}, {0, Rat(1, 2)});
    REQUIRE(path.size() == 5);
    CHECK(path.front() == Point{Rat(1, 2), Rat(0)});
    CHECK(path[1] == Point{1, 0});
    CHECK(path[2] == Point{1, 1});
    CHECK(path[3] == Point{0, 1});
    CHECK(path.back() == Point{0, Rat(1, 2)});
}
