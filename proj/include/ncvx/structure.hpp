#ifndef NCVX_STRUCTURE_HPP
#define NCVX_STRUCTURE_HPP

#include "ncvx/cell.hpp"
#include "ncvx/region.hpp"

#include <optional>
#include <vector>

namespace ncvx {

/// Leaf beyond one edge of conv Q; degenerate (poly absent) when that edge
/// lies on bd S and no bump exists beyond it.
struct LeafInfo {
    Segment base_edge;  // [q_i, q_{i+1}] in the clockwise numbering
    std::optional<Polygon> poly;

    bool present() const { return poly.has_value(); }
};

/// Valentine decomposition of a compact polygonal S with alpha(S) <= 2:
/// S = conv Q + leaves, plus the kernel with its dimension.
struct StructureAnalysis {
    std::vector<Point> Q;  // lnc points, clockwise along bd(conv Q)
    Hull convQ;
    std::vector<LeafInfo> leaves;
    Hull kernel;

    size_t n() const { return Q.size(); }
};

/// Fails (as a refutation) when S does not carry the alpha <= 2 structure:
/// an lnc point outside the kernel, lnc points not in convex position, or a
/// non-convex / split leaf.
Result<StructureAnalysis> analyze(const Polygon& S);

/// Closed convex cover of S with at most 3 parts (Valentine's theorem paths).
Result<std::vector<ConvexCell>> valentine_cover(const Polygon& S);

/// Same machinery restricted to two parts; nullopt when S needs three
/// (odd leaf circuit with every leaf present).
Result<std::optional<std::vector<ConvexCell>>> valentine_two_cover(const Polygon& S);

/// Theorem 4.1 state: one triangle of the "sun" construction.
struct SunTriangle {
    Point a_prev, a_cur;
    Rat lambda_star, mu_star;
    std::optional<Point> w;  // crossing point when the triangle is notched
};

struct SunHullState {
    std::vector<Point> F1;    // augmented point set (origin excluded)
    std::vector<Point> rays;  // a_i, by increasing argument around the origin
    std::vector<SunTriangle> tris;
    std::optional<Polygon> S1;  // S cut to conv F1
};

struct RelativeHull {
    Polygon P;
    SunHullState state;
};

/// Polygonal hull of F relative to S: F subset P subset S, P convex relative
/// to S, origin interior to ker P, boundary never longer than 2|F1| edges.
RelativeHull relative_convex_hull(const Polygon& S, const std::vector<Point>& F,
                                  const Point& origin);

} // namespace ncvx

#endif
