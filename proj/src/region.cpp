#include "ncvx/region.hpp"

#include "ncvx/error.hpp"

#include <algorithm>
#include <map>

namespace ncvx {

namespace {

// Canonical key of the carrier line of a nondegenerate segment.
struct LineKey {
    Rat a, b, c;
    bool operator<(const LineKey& o) const {
        int v = cmp(a, o.a);
        if (v != 0) return v < 0;
        v = cmp(b, o.b);
        if (v != 0) return v < 0;
        return cmp(c, o.c) < 0;
    }
};

LineKey line_key(const Point& p, const Point& q) {
    Rat a(q.y - p.y), b(p.x - q.x);
    Rat c(a * p.x + b * p.y);
    // normalize so the leading nonzero coefficient is +1
    Rat lead = (sign(a) != 0) ? a : b;
    a /= lead;
    b /= lead;
    c /= lead;
    return {a, b, c};
}

// 1D parts of bd S along the segment [a,b], as parameters (collinear runs and
// isolated touch points).
IntervalSet boundary_overlap(const Polygon& S, const Point& a, const Point& b) {
    LineFrame f = LineFrame::through(a, b);
    Segment q{a, b, Closure::closed};
    IntervalSet out;
    for (size_t i = 0; i < S.size(); ++i) {
        SegIntersect is = segment_intersection(q, S.edge(i));
        if (is.kind == SegIntersect::Kind::point)
            out.add(Interval::point(f.param(is.p)));
        else if (is.kind == SegIntersect::Kind::subsegment)
            out.add(interval_of_segment(f, is.s));
    }
    return out;
}

struct DisjointFind {
    std::vector<int> parent;
    int find(int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); }
    bool unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        parent[a] = b;
        return true;
    }
};

} // namespace

PuncturedRegion PuncturedRegion::normalize(std::optional<Polygon> S, std::vector<Segment> antennae,
                                           std::vector<Segment> raw) {
    PuncturedRegion X;
    X.S_ = std::move(S);

    for (auto& ant : antennae) {
        require(!ant.degenerate(), "BadAntenna", "degenerate antenna");
        ant.closure = Closure::closed;
        if (X.S_) {
            IntervalSet inside = segment_polygon_portion(*X.S_, ant.a, ant.b);
            IntervalSet onbd = boundary_overlap(*X.S_, ant.a, ant.b);
            // an antenna may touch S only along bd S (no interior crossing)
            require(inside.subtract(onbd).empty(), "BadAntenna",
                    "antenna enters the polygon interior");
        }
        X.antennae_.push_back(ant);
    }

    // location split
    std::vector<Feature> split;
    for (const auto& f : raw) {
        if (f.degenerate()) {
            require(f.includes_a() && f.includes_b(), "BadFeature",
                    "degenerate feature with open closure");
            bool inb = X.in_closure(f.a);
            require(inb, "FeatureOutsideS", "feature point " + point_str(f.a) + " outside cl X");
            FeatureLoc loc = FeatureLoc::boundary;
            if (X.S_ && X.S_->locate(f.a) == Polygon::Where::interior) loc = FeatureLoc::interior;
            split.push_back({f, loc});
            continue;
        }
        LineFrame fr = LineFrame::through(f.a, f.b);
        // whole carrier must be inside cl X
        IntervalSet covered;
        if (X.S_) covered = segment_polygon_portion(*X.S_, f.a, f.b);
        for (const auto& ant : X.antennae_) {
            SegIntersect is = segment_intersection({f.a, f.b, Closure::closed}, ant);
            if (is.kind == SegIntersect::Kind::subsegment)
                covered.add(interval_of_segment(fr, is.s));
            else if (is.kind == SegIntersect::Kind::point)
                covered.add(Interval::point(fr.param(is.p)));
        }
        require(covered.covers({Rat(0), Rat(1), true, true}), "FeatureOutsideS",
                "feature " + point_str(f.a) + "-" + point_str(f.b) + " leaves cl X");

        IntervalSet fset = IntervalSet::single(interval_of_segment(fr, f));
        IntervalSet bd;
        if (X.S_) bd = boundary_overlap(*X.S_, f.a, f.b);
        for (const auto& ant : X.antennae_) {
            SegIntersect is = segment_intersection({f.a, f.b, Closure::closed}, ant);
            if (is.kind == SegIntersect::Kind::subsegment)
                bd.add(interval_of_segment(fr, is.s));
            else if (is.kind == SegIntersect::Kind::point)
                bd.add(Interval::point(fr.param(is.p)));
        }
        for (const auto& c : fset.intersect(bd).components())
            split.push_back({segment_of_interval(fr, c), FeatureLoc::boundary});
        for (const auto& c : fset.subtract(bd).components())
            split.push_back({segment_of_interval(fr, c), FeatureLoc::interior});
    }

    // disjointize: merge collinear overlaps per carrier line, then split
    // crossing points off later features, then absorb covered points
    std::map<LineKey, std::vector<Feature>> lines;
    std::vector<Feature> points;
    for (auto& f : split) {
        if (f.is_point()) points.push_back(f);
        else lines[line_key(f.shape.a, f.shape.b)].push_back(f);
    }
    std::vector<Feature> segs;
    for (auto& [key, group] : lines) {
        LineFrame fr = LineFrame::through(group[0].shape.a, group[0].shape.b);
        IntervalSet inter, bound;
        for (const auto& f : group) {
            Interval iv = interval_of_segment(fr, f.shape);
            if (f.loc == FeatureLoc::interior) inter.add(iv);
            else bound.add(iv);
        }
        // interior and boundary sets on one line are disjoint by construction
        for (const auto& c : inter.components())
            segs.push_back({segment_of_interval(fr, c), FeatureLoc::interior});
        for (const auto& c : bound.components())
            segs.push_back({segment_of_interval(fr, c), FeatureLoc::boundary});
    }
    std::sort(segs.begin(), segs.end(), [](const Feature& x, const Feature& y) {
        if (x.shape.a != y.shape.a) return x.shape.a < y.shape.a;
        return x.shape.b < y.shape.b;
    });
    // crossing points between different carrier lines: keep the point on the
    // earlier feature, carve it out of the later one
    for (size_t i = 0; i < segs.size(); ++i) {
        for (size_t j = i + 1; j < segs.size(); ++j) {
            SegIntersect is = segment_intersection(segs[i].shape, segs[j].shape);
            if (is.kind != SegIntersect::Kind::point) continue;
            LineFrame fr = LineFrame::through(segs[j].shape.a, segs[j].shape.b);
            IntervalSet cur = IntervalSet::single(interval_of_segment(fr, segs[j].shape));
            cur = cur.subtract(IntervalSet::single(Interval::point(fr.param(is.p))));
            auto comps = cur.components();
            check_internal(!comps.empty(), "normalize: feature vanished while splitting");
            segs[j].shape = segment_of_interval(fr, comps[0]);
            for (size_t k = 1; k < comps.size(); ++k)
                segs.push_back({segment_of_interval(fr, comps[k]), segs[j].loc});
        }
    }
    // points covered by a segment feature (or duplicated) are dropped
    std::vector<Feature> final_pts;
    for (const auto& p : points) {
        bool covered = false;
        for (const auto& s : segs)
            if (s.shape.contains(p.shape.a)) covered = true;
        for (const auto& q : final_pts)
            if (q.shape.a == p.shape.a) covered = true;
        if (!covered) final_pts.push_back(p);
    }

    X.features_ = std::move(segs);
    X.features_.insert(X.features_.end(), final_pts.begin(), final_pts.end());
    std::sort(X.features_.begin(), X.features_.end(), [](const Feature& x, const Feature& y) {
        if (x.shape.a != y.shape.a) return x.shape.a < y.shape.a;
        return x.shape.b < y.shape.b;
    });

    // interior segment features must not close a loop (that would model a
    // region with a hole, which valid inputs never are)
    {
        std::vector<Point> nodes;
        auto node_id = [&](const Point& p) {
            for (size_t i = 0; i < nodes.size(); ++i)
                if (nodes[i] == p) return i;
            nodes.push_back(p);
            return nodes.size() - 1;
        };
        DisjointFind dsu;
        std::vector<std::pair<size_t, size_t>> edges;
        for (const auto& f : X.features_) {
            if (f.loc != FeatureLoc::interior || f.is_point()) continue;
            edges.emplace_back(node_id(f.shape.a), node_id(f.shape.b));
        }
        dsu.parent.resize(nodes.size());
        for (size_t i = 0; i < nodes.size(); ++i) dsu.parent[i] = static_cast<int>(i);
        for (auto& [u, v] : edges)
            require(dsu.unite(static_cast<int>(u), static_cast<int>(v)), "HoleCreated",
                    "interior features close a loop");
    }
    return X;
}

std::vector<Feature> PuncturedRegion::interior_features() const {
    std::vector<Feature> out;
    for (const auto& f : features_)
        if (f.loc == FeatureLoc::interior) out.push_back(f);
    return out;
}

std::vector<Feature> PuncturedRegion::boundary_features() const {
    std::vector<Feature> out;
    for (const auto& f : features_)
        if (f.loc == FeatureLoc::boundary) out.push_back(f);
    return out;
}

bool PuncturedRegion::in_closure(const Point& p) const {
    if (S_ && S_->locate(p) != Polygon::Where::exterior) return true;
    for (const auto& ant : antennae_)
        if (on_closed_segment(ant.a, p, ant.b)) return true;
    return false;
}

bool PuncturedRegion::contains(const Point& p) const {
    if (!in_closure(p)) return false;
    for (const auto& f : features_)
        if (f.contains(p)) return false;
    return true;
}

bool PuncturedRegion::sees(const Point& u, const Point& v) const {
    if (u == v) return true;

    // (u,v) must stay inside cl X ...
    std::vector<Rat> ts;
    if (S_) ts = boundary_breakpoints(*S_, u, v);
    LineFrame fr = LineFrame::through(u, v);
    for (const auto& ant : antennae_) {
        SegIntersect is = segment_intersection({u, v, Closure::closed}, ant);
        if (is.kind == SegIntersect::Kind::subsegment) {
            for (const Point* p : {&is.s.a, &is.s.b}) {
                Rat t = fr.param(*p);
                if (t > 0 && t < 1) ts.push_back(t);
            }
        }
    }
    ts.push_back(Rat(0));
    ts.push_back(Rat(1));
    std::sort(ts.begin(), ts.end());
    ts.erase(std::unique(ts.begin(), ts.end()), ts.end());
    Point d = v - u;
    for (size_t i = 0; i + 1 < ts.size(); ++i) {
        Rat mid((ts[i] + ts[i + 1]) / 2);
        Point m = u + d * mid;
        bool ok = S_ && S_->locate(m) != Polygon::Where::exterior;
        if (!ok) {
            for (const auto& ant : antennae_)
                if (on_closed_segment(ant.a, m, ant.b)) {
                    ok = true;
                    break;
                }
        }
        if (!ok) return false;
    }

    // ... and miss every removed feature
    Segment open_uv{u, v, Closure::open};
    for (const auto& f : features_) {
        if (f.is_point()) {
            if (open_uv.contains(f.shape.a)) return false;
        } else if (!segment_intersection(open_uv, f.shape).is_empty()) {
            return false;
        }
    }
    return true;
}

bool PuncturedRegion::boundary_fully_removed() const {
    if (!S_) return false;
    for (size_t i = 0; i < S_->size(); ++i) {
        Segment e = S_->edge(i);
        LineFrame fr = LineFrame::through(e.a, e.b);
        IntervalSet removed;
        for (const auto& f : features_) {
            if (f.loc != FeatureLoc::boundary) continue;
            SegIntersect is = segment_intersection(e, f.shape);
            if (is.kind == SegIntersect::Kind::point)
                removed.add(Interval::point(fr.param(is.p)));
            else if (is.kind == SegIntersect::Kind::subsegment)
                removed.add(interval_of_segment(fr, is.s));
        }
        if (!removed.covers({Rat(0), Rat(1), true, true})) return false;
    }
    return true;
}

IntervalSet PuncturedRegion::line_portion(const LineFrame& f) const {
    IntervalSet out;
    if (S_) {
        // portion of an (unbounded) line inside S: intersect every edge
        std::vector<Rat> hits;
        Point far_a = f.origin;
        for (size_t i = 0; i < S_->size(); ++i) {
            Segment e = S_->edge(i);
            // line vs closed edge
            Point d2 = e.b - e.a;
            Rat den = cross(f.dir, d2);
            if (den == 0) {
                if (f.on_line(e.a)) {
                    out.add({f.param(e.a), f.param(e.b), true, true});
                    hits.push_back(f.param(e.a));
                    hits.push_back(f.param(e.b));
                }
                continue;
            }
            Rat s(cross(e.a - f.origin, f.dir) / den);
            if (s < 0 || s > 1) continue;
            Point p = e.a + d2 * s;
            hits.push_back(f.param(p));
        }
        std::sort(hits.begin(), hits.end());
        hits.erase(std::unique(hits.begin(), hits.end()), hits.end());
        for (size_t i = 0; i + 1 < hits.size(); ++i) {
            Rat mid((hits[i] + hits[i + 1]) / 2);
            if (S_->locate(f.at(mid)) != Polygon::Where::exterior)
                out.add({hits[i], hits[i + 1], true, true});
        }
        for (const auto& t : hits)
            if (S_->locate(f.at(t)) != Polygon::Where::exterior) out.add(Interval::point(t));
    }
    for (const auto& ant : antennae_) {
        if (f.on_line(ant.a) && f.on_line(ant.b))
            out.add({f.param(ant.a), f.param(ant.b), true, true});
        else if (f.on_line(ant.a))
            out.add(Interval::point(f.param(ant.a)));
        else if (f.on_line(ant.b))
            out.add(Interval::point(f.param(ant.b)));
    }
    // subtract removed features on the line
    for (const auto& g : features_) {
        if (g.is_point()) {
            if (f.on_line(g.shape.a))
                out = out.subtract(IntervalSet::single(Interval::point(f.param(g.shape.a))));
        } else if (f.on_line(g.shape.a) && f.on_line(g.shape.b)) {
            out = out.subtract(IntervalSet::single(interval_of_segment(f, g.shape)));
        } else {
            // transversal crossing removes at most one point
            auto p = line_intersection(f.origin, f.origin + f.dir, g.shape.a, g.shape.b);
            if (p && g.shape.contains(*p) && f.on_line(*p))
                out = out.subtract(IntervalSet::single(Interval::point(f.param(*p))));
        }
    }
    return out;
}

std::vector<Point> lnc_points(const Polygon& S) {
    std::vector<Point> reflex;
    size_t n = S.size();
    for (size_t i = 0; i < n; ++i) {
        if (orientation(S.vertex(i + n - 1), S.vertex(i), S.vertex(i + 1)) < 0)
            reflex.push_back(S.vertex(i));
    }
    for (const auto& p : S.pinch_points()) reflex.push_back(p);
    std::sort(reflex.begin(), reflex.end());
    reflex.erase(std::unique(reflex.begin(), reflex.end()), reflex.end());
    if (reflex.size() < 3) return reflex;

    Hull h = convex_hull(reflex);
    if (h.dim() == 2 && h.poly().size() == reflex.size()) {
        // clockwise along bd(conv Q), starting at the lexicographically smallest
        std::vector<Point> cw = h.poly().verts();
        std::reverse(cw.begin(), cw.end());
        size_t k = 0;
        for (size_t i = 1; i < cw.size(); ++i)
            if (cw[i] < cw[k]) k = i;
        std::rotate(cw.begin(), cw.begin() + static_cast<long>(k), cw.end());
        return cw;
    }
    return reflex;  // degenerate positions: callers detect and refuse
}

bool is_two_dimensional_at(const PuncturedRegion& X, const Point& p) {
    if (X.poly() && X.poly()->locate(p) != Polygon::Where::exterior) return true;
    return false;
}

Result<ConvexCell> make_cell(std::variant<Point, Segment, Polygon> base, const PuncturedRegion& X,
                             const std::vector<Segment>& extra_exclusions,
                             const std::vector<Segment>& must_keep, const std::string& tag) {
    ConvexCell cell;
    cell.base = std::move(base);
    cell.tag = tag;

    auto process_edge = [&](const Segment& edge) -> std::optional<Refutation> {
        LineFrame fr = LineFrame::through(edge.a, edge.b);
        IntervalSet removed;
        auto clip_onto = [&](const Segment& s) {
            SegIntersect is = segment_intersection(edge, s);
            if (is.kind == SegIntersect::Kind::point)
                removed.add(Interval::point(fr.param(is.p)));
            else if (is.kind == SegIntersect::Kind::subsegment)
                removed.add(interval_of_segment(fr, is.s));
        };
        for (const auto& f : X.features()) clip_onto(f.shape);
        for (const auto& ex : extra_exclusions) clip_onto(ex);

        IntervalSet whole = IntervalSet::whole(Rat(0), Rat(1));
        IntervalSet retained = whole.subtract(removed);
        if (!retained.empty() && !retained.single_component()) {
            IntervalSet keep;
            for (const auto& mk : must_keep) {
                SegIntersect is = segment_intersection(edge, mk);
                if (is.kind == SegIntersect::Kind::point)
                    keep.add(Interval::point(fr.param(is.p)));
                else if (is.kind == SegIntersect::Kind::subsegment)
                    keep.add(interval_of_segment(fr, is.s));
            }
            if (keep.empty())
                return Refutation{"AmbiguousRetention",
                                  "edge retains a disconnected set and no must-keep hint",
                                  {edge.a, edge.b}};
            auto span = keep.span();
            IntervalSet spanset = IntervalSet::single({span->lo, span->hi, span->lo_in, span->hi_in});
            if (spanset.intersects(removed))
                return Refutation{"ColoringConflict",
                                  "must-keep parts of one edge straddle a removed piece",
                                  {edge.a, edge.b}};
            removed = whole.subtract(spanset);
        }
        for (const auto& c : removed.components())
            cell.exclusions.push_back(segment_of_interval(fr, c));
        return std::nullopt;
    };

    if (const auto* P = std::get_if<Polygon>(&cell.base)) {
        Polygon copy = *P;
        for (size_t i = 0; i < copy.size(); ++i)
            if (auto r = process_edge(copy.edge(i))) return Result<ConvexCell>::fail(*r);
    } else if (const auto* sg = std::get_if<Segment>(&cell.base)) {
        if (auto r = process_edge(*sg)) return Result<ConvexCell>::fail(*r);
    } else {
        const Point& p = std::get<Point>(cell.base);
        if (!X.contains(p))
            return Result<ConvexCell>::fail({"EmptyCell", "point cell outside X", {p}});
    }

    auto bad = cell.validate_shape();
    if (!bad.empty())
        return Result<ConvexCell>::fail({"InvalidCell", bad.front(), {}});
    return Result<ConvexCell>::success(std::move(cell));
}

Result<StarCell> star(const PuncturedRegion& X, const Point& a) {
    require(X.contains(a), "PreconditionViolated", "star center not in X");

    if (!X.poly() || X.poly()->locate(a) == Polygon::Where::exterior) {
        // 1D star along an antenna
        for (const auto& ant : X.antennae()) {
            if (!on_closed_segment(ant.a, a, ant.b)) continue;
            LineFrame fr = LineFrame::through(ant.a, ant.b);
            IntervalSet portion = X.line_portion(fr);
            Rat t = fr.param(a);
            for (const auto& c : portion.components()) {
                if (!c.contains(t)) continue;
                Segment s = segment_of_interval(fr, c);
                ConvexCell cell;
                if (s.a == s.b) cell.base = s.a;
                else {
                    cell.base = Segment{s.a, s.b, Closure::closed};
                    if (!s.includes_a()) cell.exclusions.push_back({s.a, s.a, Closure::closed});
                    if (!s.includes_b()) cell.exclusions.push_back({s.b, s.b, Closure::closed});
                }
                cell.tag = "star";
                return Result<StarCell>::success({a, std::move(cell)});
            }
        }
        return Result<StarCell>::fail({"NotConvexStar", "center not on any antenna", {a}});
    }

    // clip S by the carrier line of every interior segment feature, keeping a's side
    std::vector<Polygon> region{*X.poly()};
    for (const auto& f : X.interior_features()) {
        if (f.is_point() || collinear(f.shape.a, f.shape.b, a)) continue;
        HalfPlane h = halfplane_left_of(f.shape.a, f.shape.b);
        if (h.side(a) > 0) h = halfplane_left_of(f.shape.b, f.shape.a);
        std::vector<Polygon> next;
        for (const auto& piece : region)
            for (auto& out : clip(piece, h)) next.push_back(std::move(out));
        region = std::move(next);
    }
    for (const auto& piece : region) {
        if (piece.locate(a) == Polygon::Where::exterior) continue;
        if (!piece.is_convex())
            return Result<StarCell>::fail({"NotConvexStar", "candidate region is not convex", {a}});
        auto cell = make_cell(piece, X, {}, {}, "star");
        if (!cell.ok()) return Result<StarCell>::fail(cell.refutation.value());
        // the star property on the base skeleton
        for (const auto& w : cell->base_points()) {
            if (!X.contains(w)) continue;
            if (!X.sees(a, w))
                return Result<StarCell>::fail({"NotConvexStar", "cell point invisible from center", {a, w}});
        }
        return Result<StarCell>::success({a, std::move(*cell)});
    }
    return Result<StarCell>::fail({"NotConvexStar", "no candidate piece contains the center", {a}});
}

} // namespace ncvx
