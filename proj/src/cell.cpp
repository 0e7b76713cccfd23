#include "ncvx/cell.hpp"

#include "ncvx/error.hpp"

namespace ncvx {

int ConvexCell::base_dim() const {
    if (std::holds_alternative<Point>(base)) return 0;
    if (std::holds_alternative<Segment>(base)) return 1;
    return 2;
}

bool ConvexCell::contains(const Point& p) const {
    bool in_base = false;
    if (const auto* pt = std::get_if<Point>(&base)) in_base = (*pt == p);
    else if (const auto* sg = std::get_if<Segment>(&base)) in_base = on_closed_segment(sg->a, p, sg->b);
    else in_base = std::get<Polygon>(base).locate(p) != Polygon::Where::exterior;
    if (!in_base) return false;
    for (const auto& ex : exclusions)
        if (ex.contains(p)) return false;
    return true;
}

std::vector<Point> ConvexCell::base_points() const {
    if (const auto* pt = std::get_if<Point>(&base)) return {*pt};
    if (const auto* sg = std::get_if<Segment>(&base)) return {sg->a, sg->b};
    return std::get<Polygon>(base).verts();
}

IntervalSet retained_on_edge(const Segment& edge, const std::vector<Segment>& exclusions) {
    LineFrame f = LineFrame::through(edge.a, edge.b);
    IntervalSet ret = IntervalSet::whole(Rat(0), Rat(1), edge.includes_a(), edge.includes_b());
    for (const auto& ex : exclusions) {
        SegIntersect is = segment_intersection(edge, ex);
        if (is.kind == SegIntersect::Kind::point)
            ret = ret.subtract(IntervalSet::single(Interval::point(f.param(is.p))));
        else if (is.kind == SegIntersect::Kind::subsegment)
            ret = ret.subtract(IntervalSet::single(interval_of_segment(f, is.s)));
    }
    return ret;
}

std::vector<std::string> ConvexCell::validate_shape() const {
    std::vector<std::string> bad;
    auto on_boundary = [&](const Segment& ex) -> bool {
        if (const auto* pt = std::get_if<Point>(&base)) {
            return ex.degenerate() && ex.a == *pt;
        }
        if (const auto* sg = std::get_if<Segment>(&base)) {
            return on_closed_segment(sg->a, ex.a, sg->b) && on_closed_segment(sg->a, ex.b, sg->b);
        }
        const Polygon& P = std::get<Polygon>(base);
        for (size_t i = 0; i < P.size(); ++i) {
            Segment e = P.edge(i);
            if (on_closed_segment(e.a, ex.a, e.b) && on_closed_segment(e.a, ex.b, e.b) &&
                (ex.degenerate() || collinear(e.a, ex.a, ex.b) || ex.a == e.a || ex.a == e.b))
                return true;
        }
        return false;
    };

    for (const auto& ex : exclusions)
        if (!on_boundary(ex)) bad.push_back("exclusion not on base boundary: " + point_str(ex.a) + "-" + point_str(ex.b));

    if (const auto* pt = std::get_if<Point>(&base)) {
        if (!contains(*pt)) bad.push_back("point cell fully excluded");
        return bad;
    }
    if (const auto* sg = std::get_if<Segment>(&base)) {
        IntervalSet ret = retained_on_edge({sg->a, sg->b, Closure::closed}, exclusions);
        if (ret.empty()) bad.push_back("segment cell fully excluded");
        else if (!ret.single_component())
            bad.push_back("segment cell retains a disconnected set");
        return bad;
    }
    const Polygon& P = std::get<Polygon>(base);
    for (size_t i = 0; i < P.size(); ++i) {
        IntervalSet ret = retained_on_edge(P.edge(i), exclusions);
        if (ret.empty() || ret.single_component()) continue;
        bad.push_back("edge " + point_str(P.vertex(i)) + "-" + point_str(P.vertex(i + 1)) +
                      " retains a disconnected set");
    }
    return bad;
}

} // namespace ncvx
