#include "ncvx/invisibility.hpp"

#include "ncvx/error.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace ncvx {

InvisibilityGraph build_graph(const PuncturedRegion& X, WitnessSet W) {
    InvisibilityGraph G;
    size_t n = W.size();
    G.adj.assign(n, std::vector<bool>(n, false));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = i + 1; j < n; ++j) {
            bool invisible = !X.sees(W[i], W[j]);
            G.adj[i][j] = G.adj[j][i] = invisible;
        }
    G.witness = std::move(W);
    return G;
}

// ---------------------------------------------------------------- max clique

namespace {

void expand_clique(const InvisibilityGraph& G, std::vector<size_t>& R, std::vector<size_t>& P,
                   std::vector<size_t>& best) {
    if (P.empty()) {
        if (R.size() > best.size()) best = R;
        return;
    }
    // greedy coloring bound, classic branch and bound order
    std::vector<int> color(P.size(), 0);
    int maxc = 0;
    for (size_t i = 0; i < P.size(); ++i) {
        int c = 1;
        for (;;) {
            bool clash = false;
            for (size_t j = 0; j < i; ++j)
                if (color[j] == c && G.edge(P[i], P[j])) {
                    clash = true;
                    break;
                }
            if (!clash) break;
            ++c;
        }
        color[i] = c;
        maxc = std::max(maxc, c);
    }
    std::vector<size_t> order(P.size());
    std::iota(order.begin(), order.end(), size_t{0});
    std::sort(order.begin(), order.end(), [&](size_t a, size_t b) { return color[a] < color[b]; });

    for (size_t oi = order.size(); oi-- > 0;) {
        size_t v = P[order[oi]];
        if (R.size() + static_cast<size_t>(color[order[oi]]) <= best.size()) return;
        std::vector<size_t> P2;
        for (size_t u : P)
            if (u != v && G.edge(u, v)) P2.push_back(u);
        // keep only candidates not yet branched in this level
        std::vector<size_t> allowed;
        for (size_t oj = 0; oj < oi; ++oj) allowed.push_back(P[order[oj]]);
        std::vector<size_t> P3;
        for (size_t u : P2)
            if (std::find(allowed.begin(), allowed.end(), u) != allowed.end()) P3.push_back(u);
        R.push_back(v);
        expand_clique(G, R, P3, best);
        R.pop_back();
    }
}

} // namespace

CliqueResult clique_number(const InvisibilityGraph& G) {
    std::vector<size_t> R, P(G.size()), best;
    std::iota(P.begin(), P.end(), size_t{0});
    expand_clique(G, R, P, best);
    if (best.empty() && G.size() > 0) best = {0};
    CliqueResult res;
    res.k = static_cast<int>(best.size());
    res.members = best;
    res.cert.kind = Certificate::Kind::clique;
    res.cert.measure = "alpha";
    res.cert.bound = res.k;
    for (size_t v : best) res.cert.points.push_back(G.witness[v]);
    return res;
}

// ------------------------------------------------------------ chromatic number

namespace {

bool kcolor(const InvisibilityGraph& G, int k, std::vector<int>& color) {
    size_t n = G.size();
    // pick the uncolored vertex with maximum saturation, then degree
    size_t pick = n;
    int best_sat = -1, best_deg = -1;
    for (size_t v = 0; v < n; ++v) {
        if (color[v] >= 0) continue;
        std::vector<bool> used(static_cast<size_t>(k), false);
        int sat = 0, deg = 0;
        for (size_t u = 0; u < n; ++u) {
            if (!G.edge(v, u)) continue;
            ++deg;
            if (color[u] >= 0 && !used[static_cast<size_t>(color[u])]) {
                used[static_cast<size_t>(color[u])] = true;
                ++sat;
            }
        }
        if (sat > best_sat || (sat == best_sat && deg > best_deg)) {
            best_sat = sat;
            best_deg = deg;
            pick = v;
        }
    }
    if (pick == n) return true;
    int max_used = -1;
    for (size_t u = 0; u < n; ++u) max_used = std::max(max_used, color[u]);
    int limit = std::min(k - 1, max_used + 1);
    for (int c = 0; c <= limit; ++c) {
        bool ok = true;
        for (size_t u = 0; u < n && ok; ++u)
            if (G.edge(pick, u) && color[u] == c) ok = false;
        if (!ok) continue;
        color[pick] = c;
        if (kcolor(G, k, color)) return true;
        color[pick] = -1;
    }
    return false;
}

} // namespace

ChromaticResult chromatic_number(const InvisibilityGraph& G, size_t budget) {
    if (G.size() > budget)
        throw InputError("SizeLimit", "chromatic_number: witness set exceeds budget");
    if (G.size() == 0) return {0, {}};
    int lo = clique_number(G).k;
    for (int k = std::max(lo, 1);; ++k) {
        std::vector<int> color(G.size(), -1);
        if (kcolor(G, k, color)) return {k, color};
    }
}

// ------------------------------------------------------------ shortest odd circuit

std::optional<Certificate> find_odd_circuit(const InvisibilityGraph& G) {
    size_t n = G.size();
    std::vector<size_t> best_cycle;
    for (size_t r = 0; r < n; ++r) {
        std::vector<int> dist(n, -1);
        std::vector<size_t> parent(n, n);
        std::vector<size_t> queue{r};
        dist[r] = 0;
        for (size_t qi = 0; qi < queue.size(); ++qi) {
            size_t u = queue[qi];
            for (size_t v = 0; v < n; ++v) {
                if (!G.edge(u, v) || dist[v] >= 0) continue;
                dist[v] = dist[u] + 1;
                parent[v] = u;
                queue.push_back(v);
            }
        }
        for (size_t u = 0; u < n; ++u) {
            if (dist[u] < 0) continue;
            for (size_t v = u + 1; v < n; ++v) {
                if (!G.edge(u, v) || dist[v] < 0) continue;
                if ((dist[u] + dist[v]) % 2 != 0) continue;
                // climb to the lowest common ancestor
                std::vector<size_t> pu{u}, pv{v};
                size_t a = u, b = v;
                while (dist[a] > dist[b]) { a = parent[a]; pu.push_back(a); }
                while (dist[b] > dist[a]) { b = parent[b]; pv.push_back(b); }
                while (a != b) {
                    a = parent[a];
                    pu.push_back(a);
                    b = parent[b];
                    pv.push_back(b);
                }
                std::vector<size_t> cyc(pu.begin(), pu.end());
                for (size_t i = pv.size() - 1; i-- > 0;) cyc.push_back(pv[i]);
                if (cyc.size() % 2 == 0) continue;  // meeting vertex made it even
                if (best_cycle.empty() || cyc.size() < best_cycle.size()) best_cycle = cyc;
            }
        }
    }
    if (best_cycle.empty()) return std::nullopt;
    Certificate c;
    c.kind = Certificate::Kind::odd_circuit;
    c.measure = "beta";
    c.bound = 3;
    for (size_t v : best_cycle) c.points.push_back(G.witness[v]);
    return c;
}

// ------------------------------------------------------------ convex partition

bool hull_in_region(const PuncturedRegion& X, const std::vector<Point>& pts) {
    Hull h = convex_hull(pts);
    switch (h.dim()) {
        case -1: return true;
        case 0: return X.contains(h.pt());
        case 1: {
            const Segment& s = h.seg();
            return X.contains(s.a) && X.contains(s.b) && X.sees(s.a, s.b);
        }
        default: break;
    }
    if (!X.poly()) return false;
    const Polygon& S = *X.poly();
    if (!polygon_contains_hull(S, h)) return false;
    const Polygon& HP = h.poly();
    for (const auto& f : X.features()) {
        if (f.is_point()) {
            if (HP.locate(f.shape.a) != Polygon::Where::exterior) return false;
        } else {
            LineFrame fr = LineFrame::through(f.shape.a, f.shape.b);
            IntervalSet inside = segment_polygon_portion(HP, f.shape.a, f.shape.b);
            IntervalSet fown = IntervalSet::single(interval_of_segment(fr, f.shape));
            if (inside.intersects(fown)) return false;
        }
    }
    return true;
}

namespace {

struct PartitionSearch {
    const PuncturedRegion& X;
    const WitnessSet& W;
    std::vector<std::vector<bool>> vis;
    std::map<std::vector<size_t>, bool> hull_cache;
    std::vector<std::vector<size_t>> classes;
    std::vector<std::vector<size_t>>* found = nullptr;

    bool hull_ok(std::vector<size_t> idx) {
        std::sort(idx.begin(), idx.end());
        auto it = hull_cache.find(idx);
        if (it != hull_cache.end()) return it->second;
        std::vector<Point> pts;
        for (size_t i : idx) pts.push_back(W[i]);
        bool ok = hull_in_region(X, pts);
        hull_cache.emplace(std::move(idx), ok);
        return ok;
    }

    bool place(size_t v, size_t k) {
        if (v == W.size()) {
            *found = classes;
            return true;
        }
        for (auto& cls : classes) {
            bool mutual = true;
            for (size_t u : cls)
                if (!vis[u][v]) {
                    mutual = false;
                    break;
                }
            if (!mutual) continue;
            cls.push_back(v);
            std::vector<size_t> probe = cls;
            if (hull_ok(probe) && place(v + 1, k)) return true;
            cls.pop_back();
        }
        if (classes.size() < k) {
            classes.push_back({v});
            if (place(v + 1, k)) return true;
            classes.pop_back();
        }
        return false;
    }
};

} // namespace

PartitionResult convex_partition_number(const PuncturedRegion& X, const WitnessSet& W,
                                        size_t budget) {
    if (W.size() > budget)
        throw InputError("SizeLimit", "convex_partition_number: witness set exceeds budget");
    PartitionResult res;
    size_t n = W.size();
    if (n == 0) {
        res.k = 0;
        res.cert.kind = Certificate::Kind::convex_partition_infeasible;
        res.cert.measure = "gamma";
        return res;
    }
    PartitionSearch ps{X, W, {}, {}, {}, nullptr};
    ps.vis.assign(n, std::vector<bool>(n, true));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = i + 1; j < n; ++j) {
            bool s = X.sees(W[i], W[j]);
            ps.vis[i][j] = ps.vis[j][i] = s;
        }
    for (size_t k = 1;; ++k) {
        std::vector<std::vector<size_t>> found;
        ps.classes.clear();
        ps.found = &found;
        if (ps.place(0, k)) {
            res.k = static_cast<int>(k);
            res.classes = found;
            break;
        }
        check_internal(k <= n, "partition search failed even with singleton classes");
    }
    res.cert.kind = Certificate::Kind::convex_partition_infeasible;
    res.cert.measure = "gamma";
    res.cert.bound = res.k;
    for (size_t i = 0; i < n; ++i) res.cert.points.push_back(W[i]);
    return res;
}

// ------------------------------------------------------------- sector counting

namespace {

// half-open angular arc [lo, hi) meets the closed half-plane {x : n.x >= 0}
bool arc_meets_halfplane(const Point& n, const Point& lo, const Point& hi) {
    bool miss = sign(dot(n, lo)) < 0 && sign(dot(n, hi)) <= 0;
    return !miss;
}

} // namespace

Result<SectorBound> sector_counting_bound(const PuncturedRegion& X,
                                          const std::vector<ConvexCell>& sectors,
                                          int per_sector_lb, const Point& center,
                                          const WitnessSet& W) {
    using R = Result<SectorBound>;
    if (X.contains(center))
        return R::fail({"PreconditionUnverified", "center lies in X", {center}});
    if (sectors.empty() || per_sector_lb < 1)
        return R::fail({"PreconditionUnverified", "no sectors / bad per-sector bound", {}});

    size_t s = sectors.size();
    // every sector base must be a polygon with the center as a vertex; extract rays
    std::vector<Point> ray_lo(s), ray_hi(s);
    for (size_t k = 0; k < s; ++k) {
        const auto* P = std::get_if<Polygon>(&sectors[k].base);
        if (!P) return R::fail({"PreconditionUnverified", "sector base is not a polygon", {}});
        size_t ci = P->size();
        for (size_t i = 0; i < P->size(); ++i)
            if (P->vertex(i) == center) ci = i;
        if (ci == P->size())
            return R::fail({"PreconditionUnverified", "sector does not have the center as apex", {center}});
        ray_lo[k] = P->vertex(ci + 1) - center;
        ray_hi[k] = P->vertex(ci + P->size() - 1) - center;
    }
    for (size_t k = 0; k < s; ++k)
        if (!same_direction(ray_hi[k], ray_lo[(k + 1) % s]))
            return R::fail({"PreconditionUnverified", "sectors are not a cyclic fan", {center}});
    // cyclic consistency: hi ray of k is lo ray of some neighbor (up to scale)
    // coverage of X: every witness lies in some sector
    for (size_t i = 0; i < W.size(); ++i) {
        bool covered = false;
        for (const auto& c : sectors)
            if (c.contains(W[i])) {
                covered = true;
                break;
            }
        if (!covered)
            return R::fail({"PreconditionUnverified", "witness not covered by sectors", {W[i]}});
    }
    if (X.poly()) {
        std::vector<Polygon> bases;
        for (const auto& c : sectors) bases.push_back(std::get<Polygon>(c.base));
        if (union_area(bases) != X.poly()->area())
            return R::fail({"PreconditionUnverified", "sector union does not cover S", {}});
    }

    // per-sector lower bound via odd circuits on the witnesses inside the sector
    std::vector<std::vector<Point>> circuits(s);
    for (size_t k = 0; k < s; ++k) {
        WitnessSet sub;
        for (size_t i = 0; i < W.size(); ++i)
            if (sectors[k].contains(W[i])) sub.pts.push_back(W.pts[i]);
        if (per_sector_lb == 1) {
            if (sub.size() == 0)
                return R::fail({"PreconditionUnverified", "empty sector", {}});
            continue;
        }
        InvisibilityGraph G = build_graph(X, sub);
        if (per_sector_lb == 2) {
            bool any = false;
            for (size_t i = 0; i < G.size() && !any; ++i)
                for (size_t j = i + 1; j < G.size() && !any; ++j) any = G.edge(i, j);
            if (!any)
                return R::fail({"PreconditionUnverified", "sector has no invisibility edge", {}});
            continue;
        }
        if (per_sector_lb != 3)
            return R::fail({"PreconditionUnverified", "per-sector bounds above 3 are not certifiable", {}});
        auto circ = find_odd_circuit(G);
        if (!circ)
            return R::fail({"PreconditionUnverified", "no odd circuit inside a sector", {center}});
        circuits[k] = circ->points;
    }

    // m = max sectors met by a closed half-plane through the center
    std::vector<Point> candidates;
    for (size_t k = 0; k < s; ++k) {
        Point r = ray_lo[k];
        candidates.push_back({Rat(-r.y), r.x});
        candidates.push_back({r.y, Rat(-r.x)});
    }
    std::sort(candidates.begin(), candidates.end(), angle_less);
    size_t cn = candidates.size();
    for (size_t i = 0; i < cn; ++i) {
        const Point& u = candidates[i];
        const Point& v = candidates[(i + 1) % cn];
        if (!same_direction(u, v)) candidates.push_back(u + v);
    }
    int m = 0;
    for (const auto& n : candidates) {
        if (n.x == 0 && n.y == 0) continue;
        int cnt = 0;
        for (size_t k = 0; k < s; ++k)
            if (arc_meets_halfplane(n, ray_lo[k], ray_hi[k])) ++cnt;
        m = std::max(m, cnt);
    }
    if (m == 0) return R::fail({"PreconditionUnverified", "degenerate sector geometry", {}});

    int total = static_cast<int>(s) * per_sector_lb;
    int k = (total + m - 1) / m;

    SectorBound out;
    out.k = k;
    out.cert.kind = Certificate::Kind::sector_counting;
    out.cert.measure = "gamma";
    out.cert.bound = k;
    out.cert.sectors = static_cast<int>(s);
    out.cert.per_sector_lb = per_sector_lb;
    out.cert.max_sectors_per_convex = m;
    out.cert.center = center;
    for (size_t k = 0; k < s; ++k) out.cert.rays.push_back(center + ray_lo[k]);
    out.cert.sector_circuits = circuits;
    return R::success(std::move(out));
}

} // namespace ncvx
