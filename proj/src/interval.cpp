#include "ncvx/interval.hpp"

#include "ncvx/error.hpp"

#include <algorithm>

namespace ncvx {

LineFrame::LineFrame(Point o, Point d) : origin(std::move(o)), dir(std::move(d)) {
    check_internal(!(dir.x == 0 && dir.y == 0), "LineFrame: zero direction");
}

Rat LineFrame::param(const Point& p) const {
    check_internal(on_line(p), "LineFrame::param: point off the line");
    if (dir.x != 0) return Rat((p.x - origin.x) / dir.x);
    return Rat((p.y - origin.y) / dir.y);
}

bool Interval::contains(const Rat& t) const {
    int cl = cmp(t, lo), ch = cmp(t, hi);
    if (cl < 0 || ch > 0) return false;
    if (cl == 0 && !lo_in) return false;
    if (ch == 0 && !hi_in) return false;
    return true;
}

IntervalSet IntervalSet::single(Interval iv) {
    IntervalSet s;
    s.add(iv);
    return s;
}

IntervalSet IntervalSet::whole(const Rat& lo, const Rat& hi, bool lo_in, bool hi_in) {
    return single({lo, hi, lo_in, hi_in});
}

void IntervalSet::add(Interval iv) {
    if (iv.empty_set()) return;
    iv_.push_back(std::move(iv));
    normalize();
}

void IntervalSet::add(const IntervalSet& o) {
    for (const auto& iv : o.iv_) iv_.push_back(iv);
    normalize();
}

void IntervalSet::normalize() {
    if (iv_.empty()) return;
    std::sort(iv_.begin(), iv_.end(), [](const Interval& a, const Interval& b) {
        int c = cmp(a.lo, b.lo);
        if (c != 0) return c < 0;
        if (a.lo_in != b.lo_in) return a.lo_in;
        return cmp(a.hi, b.hi) < 0;
    });
    std::vector<Interval> out;
    out.push_back(iv_.front());
    for (size_t i = 1; i < iv_.size(); ++i) {
        Interval& cur = out.back();
        const Interval& nx = iv_[i];
        int c = cmp(nx.lo, cur.hi);
        bool joinable = c < 0 || (c == 0 && (cur.hi_in || nx.lo_in));
        if (joinable) {
            int ch = cmp(nx.hi, cur.hi);
            if (ch > 0) {
                cur.hi = nx.hi;
                cur.hi_in = nx.hi_in;
            } else if (ch == 0) {
                cur.hi_in = cur.hi_in || nx.hi_in;
            }
            if (nx.lo == cur.lo) cur.lo_in = cur.lo_in || nx.lo_in;
        } else {
            out.push_back(nx);
        }
    }
    iv_ = std::move(out);
}

IntervalSet IntervalSet::intersect(const IntervalSet& o) const {
    IntervalSet res;
    for (const auto& a : iv_) {
        for (const auto& b : o.iv_) {
            Interval r;
            int c = cmp(a.lo, b.lo);
            if (c > 0) { r.lo = a.lo; r.lo_in = a.lo_in; }
            else if (c < 0) { r.lo = b.lo; r.lo_in = b.lo_in; }
            else { r.lo = a.lo; r.lo_in = a.lo_in && b.lo_in; }
            c = cmp(a.hi, b.hi);
            if (c < 0) { r.hi = a.hi; r.hi_in = a.hi_in; }
            else if (c > 0) { r.hi = b.hi; r.hi_in = b.hi_in; }
            else { r.hi = a.hi; r.hi_in = a.hi_in && b.hi_in; }
            if (!r.empty_set()) res.iv_.push_back(r);
        }
    }
    res.normalize();
    return res;
}

namespace {

void subtract_one(const Interval& a, const Interval& b, std::vector<Interval>& out) {
    int c1 = cmp(b.hi, a.lo);
    if (c1 < 0 || (c1 == 0 && !(b.hi_in && a.lo_in))) {
        out.push_back(a);
        return;
    }
    int c2 = cmp(b.lo, a.hi);
    if (c2 > 0 || (c2 == 0 && !(b.lo_in && a.hi_in))) {
        out.push_back(a);
        return;
    }
    if (cmp(b.lo, a.lo) >= 0) {
        Interval left{a.lo, b.lo, a.lo_in, !b.lo_in};
        if (!left.empty_set()) out.push_back(left);
    }
    if (cmp(b.hi, a.hi) <= 0) {
        Interval right{b.hi, a.hi, !b.hi_in, a.hi_in};
        if (!right.empty_set()) out.push_back(right);
    }
}

} // namespace

IntervalSet IntervalSet::subtract(const IntervalSet& o) const {
    std::vector<Interval> work = iv_;
    for (const auto& b : o.iv_) {
        std::vector<Interval> next;
        for (const auto& a : work) subtract_one(a, b, next);
        work = std::move(next);
    }
    IntervalSet res;
    res.iv_ = std::move(work);
    res.normalize();
    return res;
}

bool IntervalSet::contains(const Rat& t) const {
    for (const auto& a : iv_)
        if (a.contains(t)) return true;
    return false;
}

bool IntervalSet::covers(const Interval& q) const {
    if (q.empty_set()) return true;
    IntervalSet rem = IntervalSet::single(q).subtract(*this);
    return rem.empty();
}

bool IntervalSet::subset_of(const IntervalSet& o) const {
    return subtract(o).empty();
}

bool IntervalSet::intersects(const IntervalSet& o) const {
    return !intersect(o).empty();
}

std::optional<Interval> IntervalSet::span() const {
    if (iv_.empty()) return std::nullopt;
    Interval s = iv_.front();
    s.hi = iv_.back().hi;
    s.hi_in = iv_.back().hi_in;
    return s;
}

Interval interval_of_segment(const LineFrame& f, const Segment& s) {
    Rat ta = f.param(s.a), tb = f.param(s.b);
    bool ia = s.includes_a(), ib = s.includes_b();
    if (ta > tb) {
        std::swap(ta, tb);
        std::swap(ia, ib);
    }
    return {ta, tb, ia, ib};
}

Segment segment_of_interval(const LineFrame& f, const Interval& iv) {
    Segment s;
    s.a = f.at(iv.lo);
    s.b = f.at(iv.hi);
    if (iv.lo_in && iv.hi_in) s.closure = Closure::closed;
    else if (!iv.lo_in && !iv.hi_in) s.closure = Closure::open;
    else if (!iv.lo_in) s.closure = Closure::half_open_a;
    else s.closure = Closure::half_open_b;
    return s;
}

} // namespace ncvx
