#ifndef NCVX_INTERVAL_HPP
#define NCVX_INTERVAL_HPP

#include "ncvx/geom.hpp"

#include <optional>
#include <vector>

namespace ncvx {

/// Rational parametrization of a line: t -> origin + t*dir.
struct LineFrame {
    Point origin, dir;

    LineFrame(Point o, Point d);
    static LineFrame through(const Point& a, const Point& b) { return LineFrame(a, b - a); }

    Point at(const Rat& t) const { return origin + dir * t; }
    bool on_line(const Point& p) const { return sign(cross(p - origin, dir)) == 0; }
    /// Parameter of p, which must lie on the line.
    Rat param(const Point& p) const;
};

/// One interval [lo,hi] with endpoint membership flags. lo == hi requires both
/// flags set (a point); lo < hi otherwise.
struct Interval {
    Rat lo, hi;
    bool lo_in = true, hi_in = true;

    static Interval point(const Rat& t) { return {t, t, true, true}; }
    bool is_point() const { return lo == hi; }
    bool contains(const Rat& t) const;
    bool empty_set() const { return lo > hi || (lo == hi && !(lo_in && hi_in)); }
};

/// Finite union of disjoint intervals on a line, kept normalized (sorted,
/// non-overlapping, touching pieces merged when the touch point is covered).
class IntervalSet {
public:
    IntervalSet() = default;
    static IntervalSet single(Interval iv);
    static IntervalSet whole(const Rat& lo, const Rat& hi, bool lo_in = true, bool hi_in = true);

    void add(Interval iv);         // set union with one interval
    void add(const IntervalSet&);  // set union

    IntervalSet intersect(const IntervalSet&) const;
    IntervalSet subtract(const IntervalSet&) const;

    bool contains(const Rat& t) const;
    bool covers(const Interval&) const;
    bool subset_of(const IntervalSet&) const;
    bool intersects(const IntervalSet&) const;

    bool empty() const { return iv_.empty(); }
    const std::vector<Interval>& components() const { return iv_; }
    bool single_component() const { return iv_.size() == 1; }
    /// Smallest interval covering the whole set (closed at covered ends).
    std::optional<Interval> span() const;

private:
    std::vector<Interval> iv_;
    void normalize();
};

/// Segment (with closure) <-> interval in a frame; both endpoints must be on the line.
Interval interval_of_segment(const LineFrame& f, const Segment& s);
Segment segment_of_interval(const LineFrame& f, const Interval& iv);

} // namespace ncvx

#endif
