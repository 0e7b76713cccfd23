#include "ncvx/polygon.hpp"

#include "ncvx/error.hpp"

#include <algorithm>
#include <map>

namespace ncvx {

namespace {

std::vector<Point> normal_form(std::vector<Point> v) {
    for (;;) {
        size_t n = v.size();
        if (n < 3) break;
        bool removed = false;
        for (size_t i = 0; i < n; ++i) {
            const Point& prev = v[(i + n - 1) % n];
            const Point& cur = v[i];
            const Point& next = v[(i + 1) % n];
            if (cur == prev || orientation(prev, cur, next) == 0) {
                v.erase(v.begin() + static_cast<long>(i));
                removed = true;
                break;
            }
        }
        if (!removed) break;
    }
    return v;
}

Rat signed_area2(const std::vector<Point>& v) {
    Rat s(0);
    for (size_t i = 0; i < v.size(); ++i) {
        const Point& a = v[i];
        const Point& b = v[(i + 1) % v.size()];
        s += cross(a, b);
    }
    return s;
}

void validate_simple(const std::vector<Point>& v, bool weak) {
    size_t n = v.size();
    if (!weak) {
        for (size_t i = 0; i < n; ++i)
            for (size_t j = i + 1; j < n; ++j)
                require(!(v[i] == v[j]), "BadPolygon", "repeated vertex " + point_str(v[i]));
    }
    for (size_t i = 0; i < n; ++i) {
        Segment ei{v[i], v[(i + 1) % n], Closure::closed};
        for (size_t j = i + 1; j < n; ++j) {
            bool adjacent = (j == i + 1) || (i == 0 && j == n - 1);
            Segment ej{v[j], v[(j + 1) % n], Closure::closed};
            SegIntersect is = segment_intersection(ei, ej);
            if (is.kind == SegIntersect::Kind::subsegment)
                throw InputError("BadPolygon", "overlapping edges");
            if (is.kind == SegIntersect::Kind::point) {
                bool pt_is_shared_vertex =
                    (is.p == ei.a || is.p == ei.b) && (is.p == ej.a || is.p == ej.b);
                if (adjacent) {
                    require(pt_is_shared_vertex, "BadPolygon",
                            "adjacent edges meet off the shared vertex at " + point_str(is.p));
                } else {
                    if (!weak)
                        throw InputError("BadPolygon",
                                         "edges cross at " + point_str(is.p));
                    require(pt_is_shared_vertex, "BadPolygon",
                            "edges cross at " + point_str(is.p));
                }
            }
        }
    }
}

Polygon build(std::vector<Point> pts, bool weak) {
    std::vector<Point> v = normal_form(std::move(pts));
    require(v.size() >= 3, "BadPolygon", "fewer than 3 vertices after normalization");
    Rat a2 = signed_area2(v);
    require(sign(a2) != 0, "BadPolygon", "zero area");
    if (sign(a2) < 0) std::reverse(v.begin(), v.end());
    validate_simple(v, weak);
    bool pinched = false;
    if (weak) {
        std::map<Point, int> seen;
        for (const auto& p : v)
            if (++seen[p] > 1) pinched = true;
    }
    return make_polygon_unchecked(std::move(v), pinched);
}

} // namespace

Polygon make_polygon_unchecked(std::vector<Point> v, bool pinched) {
    return Polygon(std::move(v), pinched);
}

Polygon Polygon::make(std::vector<Point> pts) { return build(std::move(pts), false); }
Polygon Polygon::make_weak(std::vector<Point> pts) { return build(std::move(pts), true); }

Rat Polygon::area() const { return Rat(signed_area2(v_) / 2); }

bool Polygon::is_convex() const {
    size_t n = v_.size();
    for (size_t i = 0; i < n; ++i)
        if (orientation(vertex(i), vertex(i + 1), vertex(i + 2)) <= 0) return false;
    return true;
}

std::vector<Point> Polygon::pinch_points() const {
    std::map<Point, int> seen;
    for (const auto& p : v_) ++seen[p];
    std::vector<Point> out;
    for (const auto& [p, k] : seen)
        if (k > 1) out.push_back(p);
    return out;
}

Polygon::Where Polygon::locate(const Point& p) const {
    size_t n = v_.size();
    for (size_t i = 0; i < n; ++i)
        if (on_closed_segment(vertex(i), p, vertex(i + 1))) return Where::boundary;
    bool inside = false;
    for (size_t i = 0; i < n; ++i) {
        const Point& a = vertex(i);
        const Point& b = vertex(i + 1);
        bool a_above = a.y > p.y;
        bool b_above = b.y > p.y;
        if (a_above == b_above) continue;
        // x of the edge at height p.y, compared to p.x
        Rat t((p.y - a.y) / (b.y - a.y));
        Rat xi(a.x + t * (b.x - a.x));
        if (xi > p.x) inside = !inside;
    }
    return inside ? Where::interior : Where::exterior;
}

void Polygon::bbox(Rat& xmin, Rat& ymin, Rat& xmax, Rat& ymax) const {
    xmin = xmax = v_[0].x;
    ymin = ymax = v_[0].y;
    for (const auto& p : v_) {
        xmin = rat_min(xmin, p.x);
        xmax = rat_max(xmax, p.x);
        ymin = rat_min(ymin, p.y);
        ymax = rat_max(ymax, p.y);
    }
}

int Hull::dim() const {
    if (std::holds_alternative<std::monostate>(v)) return -1;
    if (std::holds_alternative<Point>(v)) return 0;
    if (std::holds_alternative<Segment>(v)) return 1;
    return 2;
}

bool Hull::contains(const Point& p) const {
    switch (dim()) {
        case -1: return false;
        case 0: return pt() == p;
        case 1: return on_closed_segment(seg().a, p, seg().b);
        default: return poly().locate(p) != Polygon::Where::exterior;
    }
}

std::vector<Point> Hull::points() const {
    switch (dim()) {
        case -1: return {};
        case 0: return {pt()};
        case 1: return {seg().a, seg().b};
        default: return poly().verts();
    }
}

Hull convex_hull(std::vector<Point> pts) {
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    Hull h;
    if (pts.empty()) return h;
    if (pts.size() == 1) {
        h.v = pts[0];
        return h;
    }
    size_t n = pts.size();
    std::vector<Point> st(2 * n);
    size_t k = 0;
    for (size_t i = 0; i < n; ++i) {
        while (k >= 2 && orientation(st[k - 2], st[k - 1], pts[i]) <= 0) --k;
        st[k++] = pts[i];
    }
    size_t lower = k + 1;
    for (size_t i = n - 1; i-- > 0;) {
        while (k >= lower && orientation(st[k - 2], st[k - 1], pts[i]) <= 0) --k;
        st[k++] = pts[i];
    }
    st.resize(k - 1);
    if (st.size() < 3) {
        // collinear input: extremes are the lex-min and lex-max
        h.v = Segment{pts.front(), pts.back(), Closure::closed};
        return h;
    }
    h.v = Polygon::make(st);
    return h;
}

std::vector<Polygon> clip(const Polygon& P, const HalfPlane& h0) {
    HalfPlane h = h0.closure();
    size_t n = P.size();
    std::vector<int> side(n);
    bool any_neg = false, any_pos = false;
    for (size_t i = 0; i < n; ++i) {
        side[i] = h.side(P.vertex(i));
        any_neg = any_neg || side[i] < 0;
        any_pos = any_pos || side[i] > 0;
    }
    if (!any_pos) return {P};
    if (!any_neg) return {};

    struct Node {
        Point p;
        int s;
    };
    std::vector<Node> loop;
    for (size_t i = 0; i < n; ++i) {
        loop.push_back({P.vertex(i), side[i]});
        int si = side[i], sj = side[(i + 1) % n];
        if (si * sj < 0) {
            const Point a = P.vertex(i);
            const Point b = P.vertex(i + 1);
            Rat ea = h.eval(a), eb = h.eval(b);
            Rat t(ea / (ea - eb));
            loop.push_back({a + (b - a) * t, 0});
        }
    }

    size_t m = loop.size();
    size_t start = 0;
    while (loop[start].s <= 0) ++start;  // exists: any_pos
    std::vector<std::vector<Point>> chains;
    std::vector<Point> cur;
    for (size_t k = 1; k <= m; ++k) {
        const Node& nd = loop[(start + k) % m];
        if (nd.s <= 0) {
            cur.push_back(nd.p);
        } else if (!cur.empty()) {
            chains.push_back(std::move(cur));
            cur.clear();
        }
    }
    if (!cur.empty()) chains.push_back(std::move(cur));

    // t-order along the clip line
    Point on_line = (h.a != 0) ? Point{Rat(h.c / h.a), Rat(0)} : Point{Rat(0), Rat(h.c / h.b)};
    LineFrame f(on_line, Point{Rat(-h.b), h.a});

    struct Terminal {
        Rat t;
        bool is_exit;
        size_t chain;
    };
    std::vector<Terminal> terms;
    for (size_t i = 0; i < chains.size(); ++i) {
        check_internal(h.side(chains[i].front()) == 0 && h.side(chains[i].back()) == 0,
                       "clip: chain terminal off the line");
        terms.push_back({f.param(chains[i].front()), false, i});
        terms.push_back({f.param(chains[i].back()), true, i});
    }
    std::sort(terms.begin(), terms.end(), [](const Terminal& a, const Terminal& b) {
        int c = cmp(a.t, b.t);
        if (c != 0) return c < 0;
        return a.is_exit && !b.is_exit;
    });
    std::vector<size_t> match(chains.size());
    for (size_t k = 0; k < terms.size(); k += 2) {
        check_internal(terms[k].is_exit && !terms[k + 1].is_exit,
                       "clip: exit/entry alternation broke");
        match[terms[k].chain] = terms[k + 1].chain;
    }

    std::vector<Polygon> out;
    std::vector<bool> used(chains.size(), false);
    for (size_t i = 0; i < chains.size(); ++i) {
        if (used[i]) continue;
        std::vector<Point> pts;
        size_t j = i;
        do {
            used[j] = true;
            pts.insert(pts.end(), chains[j].begin(), chains[j].end());
            j = match[j];
        } while (j != i);
        try {
            out.push_back(Polygon::make_weak(pts));
        } catch (const InputError&) {
            // degenerate sliver, no 2D content
        }
    }
    return out;
}

Hull clip_convex(const Hull& region, const HalfPlane& h0) {
    HalfPlane h = h0.closure();
    Hull out;
    switch (region.dim()) {
        case -1: return out;
        case 0:
            if (h.contains(region.pt())) out.v = region.pt();
            return out;
        case 1: {
            const Segment& s = region.seg();
            int sa = h.side(s.a), sb = h.side(s.b);
            if (sa <= 0 && sb <= 0) {
                out.v = s;
                return out;
            }
            if (sa > 0 && sb > 0) return out;
            Rat ea = h.eval(s.a), eb = h.eval(s.b);
            Rat t(ea / (ea - eb));
            Point w = s.a + (s.b - s.a) * t;
            Point keep = (sa <= 0) ? s.a : s.b;
            if (keep == w) out.v = w;
            else out.v = Segment{keep, w, Closure::closed};
            return out;
        }
        default: {
            const Polygon& P = region.poly();
            std::vector<Point> kept;
            size_t n = P.size();
            for (size_t i = 0; i < n; ++i) {
                const Point a = P.vertex(i);
                const Point b = P.vertex(i + 1);
                int sa = h.side(a), sb = h.side(b);
                if (sa <= 0) kept.push_back(a);
                if (sa * sb < 0) {
                    Rat ea = h.eval(a), eb = h.eval(b);
                    Rat t(ea / (ea - eb));
                    kept.push_back(a + (b - a) * t);
                }
            }
            return convex_hull(kept);
        }
    }
}

Hull polygon_kernel(const Polygon& P) {
    Hull region = convex_hull(P.verts());
    for (size_t i = 0; i < P.size(); ++i) {
        region = clip_convex(region, halfplane_left_of(P.vertex(i), P.vertex(i + 1)));
        if (region.dim() < 0) break;
    }
    return region;
}

std::vector<Rat> boundary_breakpoints(const Polygon& P, const Point& u, const Point& v) {
    Segment q{u, v, Closure::closed};
    Point d = v - u;
    Rat len2 = dot(d, d);
    auto par = [&](const Point& p) { return Rat(dot(p - u, d) / len2); };
    std::vector<Rat> ts;
    for (size_t i = 0; i < P.size(); ++i) {
        SegIntersect is = segment_intersection(q, P.edge(i));
        if (is.kind == SegIntersect::Kind::point) ts.push_back(par(is.p));
        else if (is.kind == SegIntersect::Kind::subsegment) {
            ts.push_back(par(is.s.a));
            ts.push_back(par(is.s.b));
        }
    }
    std::sort(ts.begin(), ts.end());
    ts.erase(std::unique(ts.begin(), ts.end()), ts.end());
    std::vector<Rat> out;
    for (auto& t : ts)
        if (t > 0 && t < 1) out.push_back(t);
    return out;
}

IntervalSet segment_polygon_portion(const Polygon& P, const Point& u, const Point& v) {
    IntervalSet out;
    if (u == v) {
        if (P.locate(u) != Polygon::Where::exterior) out.add(Interval::point(Rat(0)));
        return out;
    }
    std::vector<Rat> ts = boundary_breakpoints(P, u, v);
    ts.insert(ts.begin(), Rat(0));
    ts.push_back(Rat(1));
    Point d = v - u;
    for (size_t i = 0; i + 1 < ts.size(); ++i) {
        Rat mid((ts[i] + ts[i + 1]) / 2);
        if (P.locate(u + d * mid) != Polygon::Where::exterior)
            out.add({ts[i], ts[i + 1], true, true});
    }
    for (const auto& t : ts)
        if (P.locate(u + d * t) != Polygon::Where::exterior) out.add(Interval::point(t));
    return out;
}

bool segment_in_polygon(const Polygon& P, const Point& u, const Point& v) {
    if (u == v) return P.locate(u) != Polygon::Where::exterior;
    return segment_polygon_portion(P, u, v).covers({Rat(0), Rat(1), true, true});
}

bool open_segment_in_polygon(const Polygon& P, const Point& u, const Point& v) {
    if (u == v) return true;
    return segment_polygon_portion(P, u, v).covers({Rat(0), Rat(1), false, false});
}

namespace {

bool polygon_inside(const Polygon& S, const Polygon& G) {
    for (size_t i = 0; i < G.size(); ++i)
        if (!segment_in_polygon(S, G.vertex(i), G.vertex(i + 1))) return false;
    // bd S must not enter int G
    for (size_t i = 0; i < S.size(); ++i) {
        const Point a = S.vertex(i);
        const Point b = S.vertex(i + 1);
        IntervalSet portion = segment_polygon_portion(G, a, b);
        Point d = b - a;
        for (const auto& c : portion.components()) {
            Rat mid((c.lo + c.hi) / 2);
            if (G.locate(a + d * mid) == Polygon::Where::interior) return false;
        }
    }
    return true;
}

} // namespace

bool polygon_contains_hull(const Polygon& S, const Hull& h) {
    switch (h.dim()) {
        case -1: return true;
        case 0: return S.locate(h.pt()) != Polygon::Where::exterior;
        case 1: return segment_in_polygon(S, h.seg().a, h.seg().b);
        default: return polygon_inside(S, h.poly());
    }
}

Rat union_area(const std::vector<Polygon>& polys) {
    if (polys.empty()) return Rat(0);
    std::vector<Rat> xs;
    for (const auto& P : polys)
        for (const auto& p : P.verts()) xs.push_back(p.x);
    for (size_t i = 0; i < polys.size(); ++i)
        for (size_t j = i + 1; j < polys.size(); ++j)
            for (size_t a = 0; a < polys[i].size(); ++a)
                for (size_t b = 0; b < polys[j].size(); ++b) {
                    SegIntersect is = segment_intersection(polys[i].edge(a), polys[j].edge(b));
                    if (is.kind == SegIntersect::Kind::point) xs.push_back(is.p.x);
                    else if (is.kind == SegIntersect::Kind::subsegment) {
                        xs.push_back(is.s.a.x);
                        xs.push_back(is.s.b.x);
                    }
                }
    std::sort(xs.begin(), xs.end());
    xs.erase(std::unique(xs.begin(), xs.end()), xs.end());

    Rat total(0);
    for (size_t s = 0; s + 1 < xs.size(); ++s) {
        const Rat& x1 = xs[s];
        const Rat& x2 = xs[s + 1];
        Rat xm((x1 + x2) / 2);
        struct Band {
            Rat lo_m, hi_m, lo1, hi1, lo2, hi2;
        };
        std::vector<Band> bands;
        for (const auto& P : polys) {
            // lower/upper edges across this slab (no vertex strictly inside it)
            bool found = false;
            Band b;
            for (size_t i = 0; i < P.size(); ++i) {
                const Point& pa = P.vertex(i);
                const Point& pb = P.vertex(i + 1);
                if (pa.x == pb.x) continue;
                Rat lo = rat_min(pa.x, pb.x), hi = rat_max(pa.x, pb.x);
                if (!(lo <= x1 && hi >= x2)) continue;
                auto yat = [&](const Rat& x) {
                    return Rat(pa.y + (x - pa.x) * (pb.y - pa.y) / (pb.x - pa.x));
                };
                Rat ym = yat(xm);
                if (!found) {
                    b = {ym, ym, yat(x1), yat(x1), yat(x2), yat(x2)};
                    found = true;
                } else {
                    if (ym < b.lo_m) { b.lo_m = ym; b.lo1 = yat(x1); b.lo2 = yat(x2); }
                    if (ym > b.hi_m) { b.hi_m = ym; b.hi1 = yat(x1); b.hi2 = yat(x2); }
                }
            }
            if (found && b.hi_m > b.lo_m) bands.push_back(b);
        }
        if (bands.empty()) continue;
        std::sort(bands.begin(), bands.end(),
                  [](const Band& a, const Band& b) { return a.lo_m < b.lo_m; });
        Band cur = bands[0];
        Rat slab(0);
        auto flush = [&]() {
            Rat w1(cur.hi1 - cur.lo1), w2(cur.hi2 - cur.lo2);
            slab += (w1 + w2) / 2;
        };
        for (size_t i = 1; i < bands.size(); ++i) {
            if (bands[i].lo_m <= cur.hi_m) {
                if (bands[i].hi_m > cur.hi_m) {
                    cur.hi_m = bands[i].hi_m;
                    cur.hi1 = bands[i].hi1;
                    cur.hi2 = bands[i].hi2;
                }
            } else {
                flush();
                cur = bands[i];
            }
        }
        flush();
        total += slab * (x2 - x1);
    }
    return total;
}

std::vector<Point> boundary_path_ccw(const Polygon& P, const Point& a, const Point& b) {
    size_t n = P.size();
    auto pos = [&](const Point& p) -> std::pair<size_t, Rat> {
        for (size_t i = 0; i < n; ++i)
            if (p == P.vertex(i)) return {i, Rat(0)};
        for (size_t i = 0; i < n; ++i) {
            if (on_closed_segment(P.vertex(i), p, P.vertex(i + 1))) {
                Point d = P.vertex(i + 1) - P.vertex(i);
                return {i, Rat(dot(p - P.vertex(i), d) / dot(d, d))};
            }
        }
        throw InternalError("boundary_path_ccw: point not on boundary " + point_str(p));
    };
    auto [ea, ta] = pos(a);
    auto [eb, tb] = pos(b);
    std::vector<Point> path{a};
    if (a == b) return path;
    if (ea == eb && ta < tb) {
        path.push_back(b);
        return path;
    }
    size_t i = ea;
    for (size_t guard = 0; guard <= n; ++guard) {
        i = (i + 1) % n;  // arrive at vertex i
        if (i == eb && tb == 0) {
            path.push_back(b);
            return path;
        }
        path.push_back(P.vertex(i));
        if (i == eb) {  // b lies inside edge i
            path.push_back(b);
            return path;
        }
    }
    throw InternalError("boundary_path_ccw: walk did not terminate");
}

} // namespace ncvx
