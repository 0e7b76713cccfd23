#ifndef NCVX_GEOM_HPP
#define NCVX_GEOM_HPP

#include "ncvx/rational.hpp"

#include <compare>
#include <optional>
#include <string>
#include <variant>

namespace ncvx {

struct Point {
    Rat x, y;

    Point() : x(0), y(0) {}
    Point(Rat px, Rat py) : x(std::move(px)), y(std::move(py)) {}
    Point(long px, long py) : x(px), y(py) {}

    friend bool operator==(const Point& a, const Point& b) { return a.x == b.x && a.y == b.y; }
    friend bool operator!=(const Point& a, const Point& b) { return !(a == b); }
    friend bool operator<(const Point& a, const Point& b) {
        int c = cmp(a.x, b.x);
        if (c != 0) return c < 0;
        return cmp(a.y, b.y) < 0;
    }

    Point operator+(const Point& o) const { return {Rat(x + o.x), Rat(y + o.y)}; }
    Point operator-(const Point& o) const { return {Rat(x - o.x), Rat(y - o.y)}; }
    Point operator*(const Rat& s) const { return {Rat(x * s), Rat(y * s)}; }
};

std::string point_str(const Point& p);

inline Rat cross(const Point& u, const Point& v) { return Rat(u.x * v.y - u.y * v.x); }
inline Rat dot(const Point& u, const Point& v) { return Rat(u.x * v.x + u.y * v.y); }

/// Sign of the cross product (q-p) x (r-p): +1 left turn, 0 collinear, -1 right turn.
int orientation(const Point& p, const Point& q, const Point& r);

inline bool collinear(const Point& p, const Point& q, const Point& r) { return orientation(p, q, r) == 0; }

/// p strictly inside the open segment (a,b); requires collinearity to hold.
bool strictly_between(const Point& a, const Point& p, const Point& b);

/// p in the closed segment [a,b] (collinearity checked).
bool on_closed_segment(const Point& a, const Point& p, const Point& b);

/// Which endpoints belong to the segment's point set.
/// half_open_a excludes endpoint a (i.e. the set (a,b]); half_open_b excludes b ([a,b)).
enum class Closure { closed, open, half_open_a, half_open_b };

std::string closure_str(Closure c);
Closure closure_from_str(const std::string& s);

struct Segment {
    Point a, b;
    Closure closure = Closure::closed;

    bool includes_a() const { return closure == Closure::closed || closure == Closure::half_open_b; }
    bool includes_b() const { return closure == Closure::closed || closure == Closure::half_open_a; }
    bool degenerate() const { return a == b; }

    /// Closure-aware membership of p in the segment's point set.
    bool contains(const Point& p) const;
};

/// The set {ax + by <= c} (closed) or {ax + by < c} (open). (a,b) != (0,0).
struct HalfPlane {
    Rat a, b, c;
    bool closed = true;

    Rat eval(const Point& p) const { return Rat(a * p.x + b * p.y - c); }
    int side(const Point& p) const { return sign(eval(p)); }
    bool contains(const Point& p) const {
        int s = side(p);
        return closed ? s <= 0 : s < 0;
    }
    /// Complement, with the opposite sense so the two sets partition the plane.
    HalfPlane complement() const { return {Rat(-a), Rat(-b), Rat(-c), !closed}; }
    /// Same boundary line, closed sense.
    HalfPlane closure() const { return {a, b, c, true}; }
};

/// Closed half-plane to the left of the directed line p -> q.
HalfPlane halfplane_left_of(const Point& p, const Point& q);

/// Exact intersection as sets (closure respected on both operands).
struct SegIntersect {
    enum class Kind { empty, point, subsegment } kind = Kind::empty;
    Point p;    // kind == point
    Segment s;  // kind == subsegment

    bool is_empty() const { return kind == Kind::empty; }
};

SegIntersect segment_intersection(const Segment& s, const Segment& t);

/// Proper line-line crossing point of aff(a1,a2) and aff(b1,b2); nullopt when parallel.
std::optional<Point> line_intersection(const Point& a1, const Point& a2, const Point& b1, const Point& b2);

/// Compare nonzero vectors by argument in [0, 2*pi), ties by length. Exact.
bool angle_less(const Point& u, const Point& v);

/// Same direction (positive multiple)?
bool same_direction(const Point& u, const Point& v);

} // namespace ncvx

#endif
