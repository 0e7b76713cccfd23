#include "ncvx/verify.hpp"

#include "ncvx/error.hpp"

#include <algorithm>

namespace ncvx {

namespace {

// closed segment inside cl X = S union antennae
bool closure_covers_segment(const PuncturedRegion& X, const Point& a, const Point& b) {
    if (a == b) return X.in_closure(a);
    LineFrame fr = LineFrame::through(a, b);
    IntervalSet covered;
    if (X.poly()) covered = segment_polygon_portion(*X.poly(), a, b);
    for (const auto& ant : X.antennae()) {
        SegIntersect is = segment_intersection({a, b, Closure::closed}, ant);
        if (is.kind == SegIntersect::Kind::subsegment)
            covered.add(interval_of_segment(fr, is.s));
        else if (is.kind == SegIntersect::Kind::point)
            covered.add(Interval::point(fr.param(is.p)));
    }
    return covered.covers({Rat(0), Rat(1), true, true});
}

IntervalSet exclusions_along(const std::vector<Segment>& exclusions, const LineFrame& fr,
                             const Segment& carrier) {
    IntervalSet out;
    for (const auto& ex : exclusions) {
        SegIntersect is = segment_intersection(carrier, ex);
        if (is.kind == SegIntersect::Kind::point)
            out.add(Interval::point(fr.param(is.p)));
        else if (is.kind == SegIntersect::Kind::subsegment)
            out.add(interval_of_segment(fr, is.s));
    }
    return out;
}

} // namespace

CellReport verify_cell(const ConvexCell& cell, const PuncturedRegion& X) {
    CellReport rep;
    auto bad = [&](const std::string& s) {
        rep.ok = false;
        rep.violations.push_back(s);
    };

    for (const auto& v : cell.validate_shape()) bad("shape: " + v);

    if (const auto* pt = std::get_if<Point>(&cell.base)) {
        if (!X.contains(*pt)) bad("point cell not in X: " + point_str(*pt));
        return rep;
    }

    if (const auto* sg = std::get_if<Segment>(&cell.base)) {
        if (!closure_covers_segment(X, sg->a, sg->b))
            bad("segment base leaves cl X: " + point_str(sg->a) + "-" + point_str(sg->b));
        LineFrame fr = LineFrame::through(sg->a, sg->b);
        IntervalSet excl = exclusions_along(cell.exclusions, fr, {sg->a, sg->b, Closure::closed});
        for (const auto& f : X.features()) {
            SegIntersect is = segment_intersection({sg->a, sg->b, Closure::closed}, f.shape);
            IntervalSet hit;
            if (is.kind == SegIntersect::Kind::point) hit.add(Interval::point(fr.param(is.p)));
            else if (is.kind == SegIntersect::Kind::subsegment)
                hit.add(interval_of_segment(fr, is.s));
            if (!hit.subset_of(excl))
                bad("removed feature inside segment cell near " + point_str(f.shape.a));
        }
        return rep;
    }

    const Polygon& P = std::get<Polygon>(cell.base);
    if (!X.poly()) {
        bad("2-dimensional cell in a 1-dimensional region");
        return rep;
    }
    Hull h;
    h.v = P;
    if (!polygon_contains_hull(*X.poly(), h)) bad("cell base leaves S");

    for (const auto& f : X.features()) {
        if (f.is_point()) {
            const Point& q = f.shape.a;
            auto where = P.locate(q);
            if (where == Polygon::Where::interior) {
                bad("removed point interior to cell: " + point_str(q));
            } else if (where == Polygon::Where::boundary) {
                bool excluded = false;
                for (const auto& ex : cell.exclusions)
                    if (ex.contains(q)) excluded = true;
                if (!excluded) bad("removed point on cell boundary not excluded: " + point_str(q));
            }
            continue;
        }
        LineFrame fr = LineFrame::through(f.shape.a, f.shape.b);
        IntervalSet inside = segment_polygon_portion(P, f.shape.a, f.shape.b);
        IntervalSet fown = IntervalSet::single(interval_of_segment(fr, f.shape));
        IntervalSet hit = inside.intersect(fown);
        if (hit.empty()) continue;
        // parts crossing the interior cannot be excluded at all
        Point d = f.shape.b - f.shape.a;
        for (const auto& c : hit.components()) {
            if (c.is_point()) continue;
            Rat mid((c.lo + c.hi) / 2);
            if (P.locate(f.shape.a + d * mid) == Polygon::Where::interior) {
                bad("removed feature crosses cell interior near " + point_str(f.shape.a));
                break;
            }
        }
        IntervalSet excl = exclusions_along(cell.exclusions, fr, {f.shape.a, f.shape.b, Closure::closed});
        if (!hit.subset_of(excl))
            bad("removed feature on cell boundary not excluded near " + point_str(f.shape.a));
    }
    return rep;
}

CoverReport verify_cover(const std::vector<ConvexCell>& cells, const PuncturedRegion& X,
                         const WitnessSet& W) {
    CoverReport rep;
    for (size_t i = 0; i < W.size(); ++i) {
        bool covered = false;
        for (const auto& c : cells)
            if (c.contains(W[i])) {
                covered = true;
                break;
            }
        if (!covered) {
            rep.ok = false;
            rep.uncovered.push_back(W[i]);
        }
    }
    if (X.poly()) {
        std::vector<Polygon> bases;
        for (const auto& c : cells)
            if (const auto* p = std::get_if<Polygon>(&c.base)) bases.push_back(*p);
        Rat ua = union_area(bases);
        if (ua != X.poly()->area()) {
            rep.ok = false;
            rep.area_ok = false;
            rep.violations.push_back("cell closures tile " + rat_str(ua) + " of area " +
                                     rat_str(X.poly()->area()));
        }
    }
    for (const auto& p : rep.uncovered)
        rep.violations.push_back("uncovered witness " + point_str(p));
    return rep;
}

namespace {

bool replay_clique(const Certificate& c, const PuncturedRegion& X) {
    if (static_cast<int>(c.points.size()) < c.bound) return false;
    for (const auto& p : c.points)
        if (!X.contains(p)) return false;
    for (size_t i = 0; i < c.points.size(); ++i)
        for (size_t j = i + 1; j < c.points.size(); ++j) {
            if (c.points[i] == c.points[j]) return false;
            if (X.sees(c.points[i], c.points[j])) return false;
        }
    return true;
}

bool replay_circuit(const std::vector<Point>& pts, const PuncturedRegion& X) {
    size_t n = pts.size();
    if (n < 3 || n % 2 == 0) return false;
    for (size_t i = 0; i < n; ++i) {
        if (!X.contains(pts[i])) return false;
        for (size_t j = i + 1; j < n; ++j)
            if (pts[i] == pts[j]) return false;
    }
    for (size_t i = 0; i < n; ++i)
        if (X.sees(pts[i], pts[(i + 1) % n])) return false;
    return true;
}

bool replay_partition(const Certificate& c, const PuncturedRegion& X) {
    WitnessSet W;
    for (const auto& p : c.points) W.pts.push_back({p, Provenance::grid});
    try {
        PartitionResult r = convex_partition_number(X, W, W.size());
        return r.k == c.bound;
    } catch (const InputError&) {
        return false;
    }
}

bool replay_sectors(const Certificate& c, const PuncturedRegion& X) {
    if (!c.center || c.rays.empty()) return false;
    const Point& O = *c.center;
    if (X.contains(O)) return false;
    size_t s = c.rays.size();
    if (c.sectors != static_cast<int>(s)) return false;
    if (c.sector_circuits.size() != s) return false;
    std::vector<Point> dir(s);
    for (size_t k = 0; k < s; ++k) {
        dir[k] = c.rays[k] - O;
        if (dir[k].x == 0 && dir[k].y == 0) return false;
    }
    // a proper fan: consecutive rays turn counterclockwise by less than pi
    for (size_t k = 0; k < s; ++k) {
        const Point& u = dir[k];
        const Point& v = dir[(k + 1) % s];
        if (!(sign(cross(u, v)) > 0)) return false;
    }
    // circuits: odd, invisible, inside the half-open wedge [r_k, r_{k+1})
    auto in_wedge = [&](size_t k, const Point& p) {
        Point v = p - O;
        if (v.x == 0 && v.y == 0) return false;
        const Point& lo = dir[k];
        const Point& hi = dir[(k + 1) % s];
        int cl = sign(cross(lo, v));
        int ch = sign(cross(v, hi));
        if (cl < 0 || ch < 0) return false;
        if (cl == 0 && sign(dot(lo, v)) <= 0) return false;
        if (ch == 0) return false;  // the hi ray belongs to the next sector
        return true;
    };
    if (c.per_sector_lb != 3) return false;
    for (size_t k = 0; k < s; ++k) {
        if (!replay_circuit(c.sector_circuits[k], X)) return false;
        for (const auto& p : c.sector_circuits[k])
            if (!in_wedge(k, p)) return false;
    }
    // m from the fan with the matching half-open test
    std::vector<Point> candidates;
    for (size_t k = 0; k < s; ++k) {
        candidates.push_back({Rat(-dir[k].y), dir[k].x});
        candidates.push_back({dir[k].y, Rat(-dir[k].x)});
    }
    std::sort(candidates.begin(), candidates.end(), angle_less);
    size_t cn = candidates.size();
    for (size_t i = 0; i < cn; ++i) {
        const Point& u = candidates[i];
        const Point& v = candidates[(i + 1) % cn];
        if (!same_direction(u, v)) candidates.push_back(u + v);
    }
    int m = 0;
    for (const auto& nvec : candidates) {
        if (nvec.x == 0 && nvec.y == 0) continue;
        int cnt = 0;
        for (size_t k = 0; k < s; ++k) {
            bool miss = sign(dot(nvec, dir[k])) < 0 && sign(dot(nvec, dir[(k + 1) % s])) <= 0;
            if (!miss) ++cnt;
        }
        m = std::max(m, cnt);
    }
    if (m != c.max_sectors_per_convex) return false;
    int total = static_cast<int>(s) * c.per_sector_lb;
    return (total + m - 1) / m == c.bound;
}

} // namespace

bool replay_certificate(const Certificate& c, const PuncturedRegion& X) {
    switch (c.kind) {
        case Certificate::Kind::clique: return replay_clique(c, X);
        case Certificate::Kind::odd_circuit: return replay_circuit(c.points, X) && c.bound <= 3;
        case Certificate::Kind::convex_partition_infeasible: return replay_partition(c, X);
        case Certificate::Kind::sector_counting: return replay_sectors(c, X);
    }
    return false;
}

} // namespace ncvx
