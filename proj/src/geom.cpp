#include "ncvx/geom.hpp"

#include "ncvx/error.hpp"

namespace ncvx {

std::string point_str(const Point& p) {
    return "(" + rat_str(p.x) + ", " + rat_str(p.y) + ")";
}

int orientation(const Point& p, const Point& q, const Point& r) {
    Rat v = cross(q - p, r - p);
    return sign(v);
}

bool strictly_between(const Point& a, const Point& p, const Point& b) {
    if (!collinear(a, p, b)) return false;
    if (p == a || p == b) return false;
    return sign(dot(p - a, p - b)) < 0;
}

bool on_closed_segment(const Point& a, const Point& p, const Point& b) {
    if (!collinear(a, p, b)) return false;
    return sign(dot(p - a, p - b)) <= 0;
}

std::string closure_str(Closure c) {
    switch (c) {
        case Closure::closed: return "closed";
        case Closure::open: return "open";
        case Closure::half_open_a: return "half_open_a";
        case Closure::half_open_b: return "half_open_b";
    }
    return "closed";
}

Closure closure_from_str(const std::string& s) {
    if (s == "closed") return Closure::closed;
    if (s == "open") return Closure::open;
    if (s == "half_open_a") return Closure::half_open_a;
    if (s == "half_open_b") return Closure::half_open_b;
    throw InputError("BadClosure", "unknown closure '" + s + "'");
}

bool Segment::contains(const Point& p) const {
    if (degenerate()) return includes_a() && includes_b() && p == a;
    if (p == a) return includes_a();
    if (p == b) return includes_b();
    return strictly_between(a, p, b);
}

HalfPlane halfplane_left_of(const Point& p, const Point& q) {
    // left of p->q: cross(q-p, x-p) >= 0  <=>  -(dy)x + (dx)y <= -(dy)px + (dx)py
    Rat dx = q.x - p.x, dy = q.y - p.y;
    Rat a = Rat(-dy), b = dx;
    Rat c = Rat(a * p.x + b * p.y);
    // flip so the left side is the <= side
    return {Rat(-a), Rat(-b), Rat(-c), true};
}

std::optional<Point> line_intersection(const Point& a1, const Point& a2, const Point& b1,
                                       const Point& b2) {
    Point d1 = a2 - a1, d2 = b2 - b1;
    Rat den = cross(d1, d2);
    if (den == 0) return std::nullopt;
    Rat t = Rat(cross(b1 - a1, d2) / den);
    return a1 + d1 * t;
}

namespace {

// 1D interval intersection of two collinear segments, as parameters along s.
SegIntersect collinear_overlap(const Segment& s, const Segment& t) {
    Point d = s.b - s.a;
    Rat len2 = dot(d, d);
    auto par = [&](const Point& p) { return Rat(dot(p - s.a, d) / len2); };
    Rat ta = par(t.a), tb = par(t.b);
    bool ta_in = t.includes_a(), tb_in = t.includes_b();
    if (ta > tb) {
        std::swap(ta, tb);
        std::swap(ta_in, tb_in);
    }
    Rat lo(0), hi(1);
    bool lo_in = s.includes_a(), hi_in = s.includes_b();
    if (ta > lo) { lo = ta; lo_in = ta_in; }
    else if (ta == lo) lo_in = lo_in && ta_in;
    if (tb < hi) { hi = tb; hi_in = tb_in; }
    else if (tb == hi) hi_in = hi_in && tb_in;

    SegIntersect out;
    if (lo > hi) return out;
    Point plo = s.a + d * lo, phi = s.a + d * hi;
    if (lo == hi) {
        if (lo_in && hi_in) {
            out.kind = SegIntersect::Kind::point;
            out.p = plo;
        }
        return out;
    }
    out.kind = SegIntersect::Kind::subsegment;
    Closure c = Closure::closed;
    if (!lo_in && !hi_in) c = Closure::open;
    else if (!lo_in) c = Closure::half_open_a;
    else if (!hi_in) c = Closure::half_open_b;
    out.s = {plo, phi, c};
    return out;
}

} // namespace

SegIntersect segment_intersection(const Segment& s, const Segment& t) {
    SegIntersect out;
    if (s.degenerate()) {
        if (!s.includes_a() || !s.includes_b()) return out;
        if (t.contains(s.a)) {
            out.kind = SegIntersect::Kind::point;
            out.p = s.a;
        }
        return out;
    }
    if (t.degenerate()) {
        if (!t.includes_a() || !t.includes_b()) return out;
        if (s.contains(t.a)) {
            out.kind = SegIntersect::Kind::point;
            out.p = t.a;
        }
        return out;
    }

    int o1 = orientation(s.a, s.b, t.a);
    int o2 = orientation(s.a, s.b, t.b);
    int o3 = orientation(t.a, t.b, s.a);
    int o4 = orientation(t.a, t.b, s.b);

    if (o1 == 0 && o2 == 0) return collinear_overlap(s, t);

    if (o1 * o2 > 0 || o3 * o4 > 0) return out;

    // proper or endpoint crossing
    auto pt = line_intersection(s.a, s.b, t.a, t.b);
    check_internal(pt.has_value(), "segment_intersection: expected crossing lines");
    if (s.contains(*pt) && t.contains(*pt)) {
        out.kind = SegIntersect::Kind::point;
        out.p = *pt;
    }
    return out;
}

namespace {
// 0: positive x-axis; 1: upper half (y>0); 2: negative x-axis; 3: lower half
int angle_class(const Point& u) {
    int sy = sign(u.y);
    if (sy > 0) return 1;
    if (sy < 0) return 3;
    return sign(u.x) > 0 ? 0 : 2;
}
} // namespace

bool angle_less(const Point& u, const Point& v) {
    check_internal(!(u.x == 0 && u.y == 0) && !(v.x == 0 && v.y == 0),
                   "angle_less: zero vector");
    int cu = angle_class(u), cv = angle_class(v);
    if (cu != cv) return cu < cv;
    Rat cr = cross(u, v);
    int s = sign(cr);
    if (s != 0) return s > 0;
    // same ray: shorter first
    return cmp(dot(u, u), dot(v, v)) < 0;
}

bool same_direction(const Point& u, const Point& v) {
    return sign(cross(u, v)) == 0 && sign(dot(u, v)) > 0;
}

} // namespace ncvx
