#include "ncvx/witness.hpp"

#include "ncvx/error.hpp"

#include <algorithm>
#include <map>

namespace ncvx {

std::vector<Point> WitnessSet::points() const {
    std::vector<Point> out;
    out.reserve(pts.size());
    for (const auto& w : pts) out.push_back(w.p);
    return out;
}

namespace {

Rat linf(const Point& a, const Point& b) {
    return rat_max(rat_abs(Rat(a.x - b.x)), rat_abs(Rat(a.y - b.y)));
}

} // namespace

WitnessSet generate_witnesses(const PuncturedRegion& X, int density) {
    require(density >= 1, "BadDensity", "density must be >= 1");
    std::map<Point, Provenance> acc;
    auto put = [&](const Point& p, Provenance tag) {
        if (!X.contains(p)) return;
        acc.emplace(p, tag);  // first provenance wins
    };

    std::vector<Point> anchors;  // vertices + feature endpoints, for epsilon
    if (X.poly())
        for (const auto& p : X.poly()->verts()) anchors.push_back(p);
    for (const auto& ant : X.antennae()) {
        anchors.push_back(ant.a);
        anchors.push_back(ant.b);
    }
    for (const auto& f : X.features()) {
        anchors.push_back(f.shape.a);
        if (!f.is_point()) anchors.push_back(f.shape.b);
    }

    if (X.poly())
        for (const auto& p : X.poly()->verts()) put(p, Provenance::vertex);
    for (const auto& ant : X.antennae()) {
        put(ant.a, Provenance::vertex);
        put(ant.b, Provenance::vertex);
    }
    for (const auto& f : X.features()) {
        put(f.shape.a, Provenance::feature_endpoint);
        if (!f.is_point()) put(f.shape.b, Provenance::feature_endpoint);
    }

    // midpoints of the boundary pieces of X
    auto piece_midpoints = [&](const Segment& carrier) {
        LineFrame fr = LineFrame::through(carrier.a, carrier.b);
        IntervalSet kept = IntervalSet::whole(Rat(0), Rat(1));
        for (const auto& f : X.features()) {
            SegIntersect is = segment_intersection(carrier, f.shape);
            if (is.kind == SegIntersect::Kind::point)
                kept = kept.subtract(IntervalSet::single(Interval::point(fr.param(is.p))));
            else if (is.kind == SegIntersect::Kind::subsegment)
                kept = kept.subtract(IntervalSet::single(interval_of_segment(fr, is.s)));
        }
        for (const auto& c : kept.components())
            put(fr.at(Rat((c.lo + c.hi) / 2)), Provenance::midpoint);
    };
    if (X.poly())
        for (size_t i = 0; i < X.poly()->size(); ++i) piece_midpoints(X.poly()->edge(i));
    for (const auto& ant : X.antennae()) piece_midpoints(ant);

    // offsets around removed features
    Rat eps(0);
    {
        Rat best(-1);
        for (size_t i = 0; i < anchors.size(); ++i)
            for (size_t j = i + 1; j < anchors.size(); ++j) {
                if (anchors[i] == anchors[j]) continue;
                Rat d = linf(anchors[i], anchors[j]);
                if (best < 0 || d < best) best = d;
            }
        if (best > 0) eps = Rat(best / 8);
    }
    if (eps > 0) {
        for (const auto& f : X.features()) {
            if (f.is_point()) {
                const Point& q = f.shape.a;
                put({Rat(q.x + eps), q.y}, Provenance::offset);
                put({Rat(q.x - eps), q.y}, Provenance::offset);
                put({q.x, Rat(q.y + eps)}, Provenance::offset);
                put({q.x, Rat(q.y - eps)}, Provenance::offset);
            } else {
                Point d = f.shape.b - f.shape.a;
                Rat m = rat_max(rat_abs(d.x), rat_abs(d.y));
                Point u{Rat(d.x / m), Rat(d.y / m)};
                Point nrm{Rat(-u.y), u.x};
                Point mid{Rat((f.shape.a.x + f.shape.b.x) / 2), Rat((f.shape.a.y + f.shape.b.y) / 2)};
                put(mid + nrm * eps, Provenance::offset);
                put(mid - nrm * eps, Provenance::offset);
                put(f.shape.a - u * eps, Provenance::offset);
                put(f.shape.b + u * eps, Provenance::offset);
                put(f.shape.a + nrm * eps, Provenance::offset);
                put(f.shape.a - nrm * eps, Provenance::offset);
                put(f.shape.b + nrm * eps, Provenance::offset);
                put(f.shape.b - nrm * eps, Provenance::offset);
            }
        }
    }

    // grid over the bounding box
    Rat xmin, ymin, xmax, ymax;
    bool have_box = false;
    if (X.poly()) {
        X.poly()->bbox(xmin, ymin, xmax, ymax);
        have_box = true;
    }
    for (const auto& ant : X.antennae()) {
        for (const Point* p : {&ant.a, &ant.b}) {
            if (!have_box) {
                xmin = xmax = p->x;
                ymin = ymax = p->y;
                have_box = true;
            } else {
                xmin = rat_min(xmin, p->x);
                xmax = rat_max(xmax, p->x);
                ymin = rat_min(ymin, p->y);
                ymax = rat_max(ymax, p->y);
            }
        }
    }
    if (have_box) {
        Rat w(xmax - xmin), h(ymax - ymin);
        for (int i = 0; i < density; ++i)
            for (int j = 0; j < density; ++j) {
                Rat fx(2 * i + 1), fy(2 * j + 1);
                Point g{Rat(xmin + w * fx / (2 * density)), Rat(ymin + h * fy / (2 * density))};
                put(g, Provenance::grid);
            }
    }

    WitnessSet out;
    for (const auto& [p, tag] : acc) out.pts.push_back({p, tag});
    return out;
}

} // namespace ncvx
