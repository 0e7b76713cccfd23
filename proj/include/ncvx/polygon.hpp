#ifndef NCVX_POLYGON_HPP
#define NCVX_POLYGON_HPP

#include "ncvx/geom.hpp"
#include "ncvx/interval.hpp"

#include <variant>
#include <vector>

namespace ncvx {

/// Simple polygon in normal form: counterclockwise, area > 0, no repeated or
/// collinear-consecutive vertices. make_weak additionally allows pinch
/// vertices (non-adjacent edges may share isolated endpoints, never cross or
/// overlap); such polygons are marked weakly simple.
class Polygon {
public:
    static Polygon make(std::vector<Point> pts);
    static Polygon make_weak(std::vector<Point> pts);

    const std::vector<Point>& verts() const { return v_; }
    size_t size() const { return v_.size(); }
    const Point& vertex(size_t i) const { return v_[i % v_.size()]; }
    Segment edge(size_t i) const { return {vertex(i), vertex(i + 1), Closure::closed}; }

    Rat area() const;
    bool is_convex() const;
    bool weakly_simple() const { return pinched_; }
    /// Vertices visited more than once (weak polygons only).
    std::vector<Point> pinch_points() const;

    enum class Where { interior, boundary, exterior };
    Where locate(const Point& p) const;

    void bbox(Rat& xmin, Rat& ymin, Rat& xmax, Rat& ymax) const;

private:
    friend Polygon make_polygon_unchecked(std::vector<Point>, bool);
    explicit Polygon(std::vector<Point> v, bool pinched) : v_(std::move(v)), pinched_(pinched) {}
    std::vector<Point> v_;
    bool pinched_ = false;
};

/// Internal factory; skips nothing but visibility. Not for external use.
Polygon make_polygon_unchecked(std::vector<Point> v, bool pinched);

/// Convex hull of a finite point set, by affine dimension.
struct Hull {
    std::variant<std::monostate, Point, Segment, Polygon> v;

    int dim() const;  // -1 empty, 0 point, 1 segment, 2 polygon
    bool contains(const Point& p) const;  // closed set membership
    const Polygon& poly() const { return std::get<Polygon>(v); }
    const Segment& seg() const { return std::get<Segment>(v); }
    const Point& pt() const { return std::get<Point>(v); }
    std::vector<Point> points() const;  // vertices of the hull
};

Hull convex_hull(std::vector<Point> pts);

/// Clip a (possibly non-convex) polygon by the closed side of a half-plane
/// boundary. Returns the 2D pieces; degenerate slivers are dropped.
std::vector<Polygon> clip(const Polygon& P, const HalfPlane& h);

/// Clip a convex region (given as a Hull) by a closed half-plane, exact,
/// collapsing dimension as needed.
Hull clip_convex(const Hull& region, const HalfPlane& h);

/// Kernel of a polygon: intersection of all inner edge half-planes.
Hull polygon_kernel(const Polygon& P);

/// Parameters t in (0,1) where [u,v] meets bd P (crossings and collinear-run ends).
std::vector<Rat> boundary_breakpoints(const Polygon& P, const Point& u, const Point& v);

/// Closed segment [u,v] contained in P (boundary counts as inside).
bool segment_in_polygon(const Polygon& P, const Point& u, const Point& v);
/// Open segment (u,v) contained in P.
bool open_segment_in_polygon(const Polygon& P, const Point& u, const Point& v);

/// hull subset of S, exact (2D hulls require bd S not to enter int hull).
bool polygon_contains_hull(const Polygon& S, const Hull& h);

/// Portion of [u,v] lying in the closed region P, as parameters along u->v in [0,1].
IntervalSet segment_polygon_portion(const Polygon& P, const Point& u, const Point& v);

/// Exact area of the union of convex polygons (slab decomposition).
Rat union_area(const std::vector<Polygon>& polys);

/// Boundary chain of P from point a to point b walking in positive
/// (counterclockwise) order; a and b must lie on bd P and are inserted if they
/// fall inside an edge. The result includes both endpoints.
std::vector<Point> boundary_path_ccw(const Polygon& P, const Point& a, const Point& b);

} // namespace ncvx

#endif
