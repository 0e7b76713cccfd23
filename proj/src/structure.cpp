#include "ncvx/structure.hpp"

#include "ncvx/error.hpp"

#include <algorithm>

namespace ncvx {

namespace {

Point hull_inner_point(const Hull& h) {
    // centroid of up to three vertices
    auto pts = h.points();
    check_internal(h.dim() == 2, "hull_inner_point: not 2-dimensional");
    Point c{Rat(0), Rat(0)};
    for (int i = 0; i < 3; ++i) c = c + pts[static_cast<size_t>(i)];
    return {Rat(c.x / 3), Rat(c.y / 3)};
}

} // namespace

Result<StructureAnalysis> analyze(const Polygon& S) {
    using R = Result<StructureAnalysis>;
    StructureAnalysis st;
    st.kernel = polygon_kernel(S);
    st.Q = lnc_points(S);
    size_t n = st.Q.size();

    for (const auto& q : st.Q)
        if (!st.kernel.contains(q))
            return R::fail({"NonValentine", "lnc point outside the kernel (alpha(S) >= 3)", {q}});

    st.convQ = convex_hull(st.Q);
    if (n >= 3) {
        if (st.convQ.dim() != 2 || st.convQ.poly().size() != n)
            return R::fail({"NonValentine", "lnc points are not in convex position", st.Q});
        // order Q clockwise along bd(conv Q): lnc_points already did that when
        // possible; re-derive from the hull for safety
        std::vector<Point> cw = st.convQ.poly().verts();
        std::reverse(cw.begin(), cw.end());
        size_t k = 0;
        for (size_t i = 1; i < cw.size(); ++i)
            if (cw[i] < cw[k]) k = i;
        std::rotate(cw.begin(), cw.begin() + static_cast<long>(k), cw.end());
        st.Q = cw;

        Point inner = hull_inner_point(st.convQ);
        Rat leaf_area(0);
        for (size_t i = 0; i < n; ++i) {
            const Point& a = st.Q[i];
            const Point& b = st.Q[(i + 1) % n];
            HalfPlane h = halfplane_left_of(a, b);
            if (h.contains(inner)) h = halfplane_left_of(b, a);
            auto pieces = clip(S, h);
            LeafInfo leaf{{a, b, Closure::closed}, std::nullopt};
            if (pieces.size() > 1)
                return R::fail({"NonConvexLeaf", "leaf splits into several pieces", {a, b}});
            if (pieces.size() == 1) {
                if (!pieces[0].is_convex())
                    return R::fail({"NonConvexLeaf", "leaf is not convex", {a, b}});
                if (pieces[0].locate(a) == Polygon::Where::exterior ||
                    pieces[0].locate(b) == Polygon::Where::exterior)
                    return R::fail({"NonConvexLeaf", "leaf does not reach its base edge", {a, b}});
                leaf_area += pieces[0].area();
                leaf.poly = std::move(pieces[0]);
            }
            st.leaves.push_back(std::move(leaf));
        }
        if (Rat(st.convQ.poly().area() + leaf_area) != S.area())
            return R::fail({"NonValentine", "conv Q + leaves do not account for S", st.Q});
    } else if (n == 2) {
        const Point& a = st.Q[0];
        const Point& b = st.Q[1];
        for (int side = 0; side < 2; ++side) {
            HalfPlane h = side == 0 ? halfplane_left_of(a, b) : halfplane_left_of(b, a);
            auto pieces = clip(S, h);
            if (pieces.size() != 1)
                return R::fail({"NonConvexLeaf", "half of S is not a single piece", {a, b}});
            if (!pieces[0].is_convex())
                return R::fail({"NonConvexLeaf", "half of S is not convex", {a, b}});
            st.leaves.push_back({{side == 0 ? a : b, side == 0 ? b : a, Closure::closed},
                                 std::move(pieces[0])});
        }
    }
    return R::success(std::move(st));
}

namespace {

// union polygon conv Q + the selected leaves; fails when the union is not convex
Result<ConvexCell> splice_cover_cell(const StructureAnalysis& st,
                                     const std::vector<bool>& take, const std::string& tag) {
    size_t n = st.n();
    std::vector<Point> qccw(st.Q.rbegin(), st.Q.rend());  // counterclockwise
    std::vector<Point> verts;
    for (size_t i = 0; i < n; ++i) {
        const Point& a = qccw[i];
        const Point& b = qccw[(i + 1) % n];
        // leaf index in the clockwise numbering: edge [Q[j], Q[j+1]] equals [b, a]
        size_t j = n;
        for (size_t k = 0; k < n; ++k)
            if (st.Q[k] == b && st.Q[(k + 1) % n] == a) j = k;
        check_internal(j < n, "splice_cover_cell: edge lookup failed");
        if (take[j] && st.leaves[j].present()) {
            auto path = boundary_path_ccw(*st.leaves[j].poly, a, b);
            for (size_t t = 0; t + 1 < path.size(); ++t) verts.push_back(path[t]);
        } else {
            verts.push_back(a);
        }
    }
    Polygon cellpoly = Polygon::make(verts);
    if (!cellpoly.is_convex())
        return Result<ConvexCell>::fail({"NonConvexUnion", "grouped leaves are not convex: " + tag, {}});
    ConvexCell cell;
    cell.base = std::move(cellpoly);
    cell.tag = tag;
    return Result<ConvexCell>::success(std::move(cell));
}

Result<std::vector<ConvexCell>> cover_impl(const Polygon& S, bool at_most_two, bool* needs_three) {
    using R = Result<std::vector<ConvexCell>>;
    auto st = analyze(S);
    if (!st.ok()) return R::fail(st.refutation.value());
    size_t n = st->n();
    if (needs_three) *needs_three = false;

    if (n == 0) {
        ConvexCell c;
        c.base = S;
        c.tag = "whole";
        std::vector<ConvexCell> out{std::move(c)};
        return R::success(std::move(out));
    }
    if (n == 1) {
        const Point& q = st->Q[0];
        // extend one of the incident edges through q
        size_t m = S.size();
        size_t qi = m;
        for (size_t i = 0; i < m; ++i)
            if (S.vertex(i) == q) qi = i;
        check_internal(qi < m, "cover: lnc point is not a vertex");
        for (const Point& other : {S.vertex(qi + m - 1), S.vertex(qi + 1)}) {
            HalfPlane h = halfplane_left_of(other, q);
            auto left = clip(S, h);
            auto right = clip(S, h.complement().closure());
            if (left.size() != 1 || right.size() != 1) continue;
            if (!left[0].is_convex() || !right[0].is_convex()) continue;
            std::vector<ConvexCell> out;
            ConvexCell c1, c2;
            c1.base = std::move(left[0]);
            c1.tag = "split+";
            c2.base = std::move(right[0]);
            c2.tag = "split-";
            out.push_back(std::move(c1));
            out.push_back(std::move(c2));
            return R::success(std::move(out));
        }
        return R::fail({"NonConvexLeaf", "single lnc point split failed (alpha(S) >= 3?)", {q}});
    }
    if (n == 2) {
        std::vector<ConvexCell> out;
        for (int i = 0; i < 2; ++i) {
            ConvexCell c;
            c.base = *st->leaves[static_cast<size_t>(i)].poly;
            c.tag = i == 0 ? "half+" : "half-";
            out.push_back(std::move(c));
        }
        return R::success(std::move(out));
    }

    // n >= 3: 2-color the leaf circuit, break at absent leaves
    std::vector<size_t> present;
    for (size_t i = 0; i < n; ++i)
        if (st->leaves[i].present()) present.push_back(i);
    bool all_present = present.size() == n;

    std::vector<bool> groupA(n, false), groupB(n, false), groupC(n, false);
    bool use_three = false;
    if (!all_present) {
        // walk the cycle starting after an absent leaf; adjacent present leaves alternate
        size_t startgap = 0;
        for (size_t i = 0; i < n; ++i)
            if (!st->leaves[i].present()) startgap = i;
        int color = 0;
        bool prev_present = false;
        for (size_t k = 1; k <= n; ++k) {
            size_t i = (startgap + k) % n;
            if (!st->leaves[i].present()) {
                prev_present = false;
                continue;
            }
            if (prev_present) color ^= 1;
            else color = 0;
            (color == 0 ? groupA : groupB)[i] = true;
            prev_present = true;
        }
    } else if (n % 2 == 0) {
        for (size_t i = 0; i < n; ++i) (i % 2 == 0 ? groupA : groupB)[i] = true;
    } else {
        use_three = true;
        if (needs_three) *needs_three = true;
        if (at_most_two) return R::success({});  // signalled via needs_three
        for (size_t i = 0; i + 1 < n; ++i) (i % 2 == 0 ? groupA : groupB)[i] = true;
        groupC[n - 1] = true;
    }

    std::vector<ConvexCell> out;
    auto cellA = splice_cover_cell(*st, groupA, "coverA");
    if (!cellA.ok()) return R::fail(cellA.refutation.value());
    out.push_back(std::move(*cellA));
    auto cellB = splice_cover_cell(*st, groupB, "coverB");
    if (!cellB.ok()) return R::fail(cellB.refutation.value());
    out.push_back(std::move(*cellB));
    if (use_three) {
        auto cellC = splice_cover_cell(*st, groupC, "coverC");
        if (!cellC.ok()) return R::fail(cellC.refutation.value());
        out.push_back(std::move(*cellC));
    }
    return R::success(std::move(out));
}

} // namespace

Result<std::vector<ConvexCell>> valentine_cover(const Polygon& S) {
    return cover_impl(S, false, nullptr);
}

Result<std::optional<std::vector<ConvexCell>>> valentine_two_cover(const Polygon& S) {
    using R = Result<std::optional<std::vector<ConvexCell>>>;
    bool needs_three = false;
    auto res = cover_impl(S, true, &needs_three);
    if (!res.ok()) return R::fail(res.refutation.value());
    if (needs_three) return R::success(std::nullopt);
    return R::success(std::move(*res));
}

// -------------------------------------------------------- relative convex hull

namespace {

// last point of S1 on the ray {origin + t*(a-origin) : t >= 0}; S1 star-shaped
// with respect to origin
Point extend_to_boundary(const Polygon& S1, const Point& origin, const Point& a) {
    Point d = a - origin;
    Rat best(0);
    bool found = false;
    for (size_t i = 0; i < S1.size(); ++i) {
        Segment e = S1.edge(i);
        Point d2 = e.b - e.a;
        Rat den = cross(d, d2);
        if (den == 0) {
            if (collinear(origin, e.a, a) || collinear(origin, e.b, a)) {
                for (const Point* p : {&e.a, &e.b}) {
                    if (!collinear(origin, *p, a)) continue;
                    Rat t(dot(*p - origin, d) / dot(d, d));
                    if (t > 0 && (!found || t > best)) {
                        best = t;
                        found = true;
                    }
                }
            }
            continue;
        }
        Rat s(cross(origin - e.a, d) / cross(d2, d));
        if (s < 0 || s > 1) continue;
        Point p = e.a + d2 * s;
        Rat t(dot(p - origin, d) / dot(d, d));
        if (t > 0 && (!found || t > best)) {
            best = t;
            found = true;
        }
    }
    check_internal(found, "extend_to_boundary: ray never leaves through bd S1");
    return origin + d * best;
}

// max lambda in [0,1] with [origin + lambda*A, origin + B] inside S1
Rat max_slide(const Polygon& S1, const Point& origin, const Point& A, const Point& B) {
    std::vector<Rat> cand{Rat(1)};
    Rat cBA = cross(B, A);
    for (const auto& vp : S1.verts()) {
        Point V = vp - origin;
        // collinear(lambda*A, B, V): cross(B,V) = lambda*(cross(B,A) + cross(A,V))
        Rat den(cross(B, A) + cross(A, V));
        if (den == 0) continue;
        Rat lam(cross(B, V) / den);
        if (lam > 0 && lam < 1) cand.push_back(lam);
    }
    for (size_t i = 0; i < S1.size(); ++i) {
        // lambda*A on the edge line
        Segment e = S1.edge(i);
        Point ea = e.a - origin, eb = e.b - origin;
        Point d2 = eb - ea;
        // cross(lambda*A - ea, d2) = 0
        Rat den = cross(A, d2);
        if (den == 0) continue;
        Rat lam(cross(ea, d2) / den);
        if (lam > 0 && lam < 1) cand.push_back(lam);
    }
    std::sort(cand.begin(), cand.end(), [](const Rat& x, const Rat& y) { return x > y; });
    for (const auto& lam : cand) {
        Point from = origin + A * lam;
        Point to = origin + B;
        if (segment_in_polygon(S1, from, to)) return lam;
    }
    return Rat(0);
}

} // namespace

RelativeHull relative_convex_hull(const Polygon& S, const std::vector<Point>& F,
                                  const Point& origin) {
    Hull K = polygon_kernel(S);
    require(K.dim() == 2 && K.poly().locate(origin) == Polygon::Where::interior,
            "OriginNotInKernel", "origin must be interior to ker S");
    for (const auto& f : F)
        require(S.locate(f) != Polygon::Where::exterior, "PreconditionViolated",
                "relative hull: F must lie in S");

    SunHullState state;

    // Step 1: augment so the origin is interior to conv F1
    std::vector<Point> F1;
    for (const auto& f : F)
        if (f != origin) F1.push_back(f);
    {
        Rat delta(1);
        std::vector<Point> dirs{{Rat(1), Rat(0)}, {Rat(-1), Rat(1)}, {Rat(-1), Rat(-1)}};
        auto origin_interior = [&](const std::vector<Point>& pts) {
            Hull h = convex_hull(pts);
            return h.dim() == 2 && h.poly().locate(origin) == Polygon::Where::interior;
        };
        for (const auto& d : dirs) {
            if (origin_interior(F1)) break;
            Point cand = origin + d * delta;
            int guard = 0;
            while (K.poly().locate(cand) != Polygon::Where::interior) {
                delta /= 2;
                cand = origin + d * delta;
                check_internal(++guard < 512, "augmentation point search stalled");
            }
            F1.push_back(cand);
        }
        check_internal(origin_interior(F1), "augmentation failed to surround the origin");
    }
    state.F1 = F1;

    // Step 2: S1 = S cut to conv F1
    Hull hf = convex_hull(F1);
    std::vector<Polygon> region{S};
    const Polygon& HF = hf.poly();
    for (size_t i = 0; i < HF.size(); ++i) {
        HalfPlane h = halfplane_left_of(HF.vertex(i), HF.vertex(i + 1));
        std::vector<Polygon> next;
        for (const auto& piece : region)
            for (auto& q : clip(piece, h)) next.push_back(std::move(q));
        region = std::move(next);
    }
    check_internal(region.size() == 1, "S cut to conv F1 should stay connected");
    Polygon S1 = std::move(region[0]);

    // Step 3: rays
    std::vector<Point> rays;
    for (const auto& a : F1) {
        Point ext = extend_to_boundary(S1, origin, a);
        bool dup = false;
        for (const auto& r : rays)
            if (same_direction(r - origin, ext - origin)) {
                check_internal(r == ext, "equal-argument rays extend to different points");
                dup = true;
            }
        if (!dup) rays.push_back(ext);
    }
    std::sort(rays.begin(), rays.end(), [&](const Point& u, const Point& v) {
        return angle_less(u - origin, v - origin);
    });
    check_internal(rays.size() >= 3, "fewer than 3 distinct rays");
    state.rays = rays;

    // Step 4 + 5: per-triangle notches, then the union polygon
    std::vector<Point> boundary;
    size_t n = rays.size();
    for (size_t i = 0; i < n; ++i) {
        const Point& prev = rays[(i + n - 1) % n];
        const Point& cur = rays[i];
        Point A = prev - origin, B = cur - origin;
        SunTriangle tri{prev, cur, Rat(1), Rat(1), std::nullopt};
        if (!segment_in_polygon(S1, prev, cur)) {
            tri.lambda_star = max_slide(S1, origin, A, B);
            tri.mu_star = max_slide(S1, origin, B, A);
            check_internal(tri.lambda_star > 0 && tri.mu_star > 0,
                           "slide maxima must be positive (origin interior to ker)");
            auto w = line_intersection(origin + A * tri.lambda_star, origin + B,
                                       origin + A, origin + B * tri.mu_star);
            check_internal(w.has_value(), "notch segments must cross");
            tri.w = *w;
        }
        if (tri.w) boundary.push_back(*tri.w);
        boundary.push_back(cur);
        state.tris.push_back(tri);
    }
    state.S1 = S1;
    Polygon P = Polygon::make(boundary);
    check_internal(P.verts().size() <= 2 * state.F1.size() + 2,
                   "relative hull boundary exceeded 2|F1| edges");
    return {std::move(P), std::move(state)};
}

} // namespace ncvx
