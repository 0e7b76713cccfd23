#ifndef NCVX_TESTUTIL_HPP
#define NCVX_TESTUTIL_HPP

#include "ncvx/error.hpp"
#include "ncvx/polygon.hpp"
#include "ncvx/region.hpp"

#include <random>
#include <vector>

namespace ncvx::testutil {

struct Rng {
    std::mt19937_64 g;
    explicit Rng(uint64_t seed) : g(seed) {}

    long irange(long lo, long hi) {  // inclusive
        return std::uniform_int_distribution<long>(lo, hi)(g);
    }
    Rat rat(long lo, long hi, long maxden = 4) {
        long den = irange(1, maxden);
        long num = irange(lo * den, hi * den);
        Rat r(num, den);
        r.canonicalize();
        return r;
    }
    Point point(long lo, long hi, long maxden = 4) { return {rat(lo, hi, maxden), rat(lo, hi, maxden)}; }
};

/// Simple polygon star-shaped with respect to the origin: vertices in angular
/// order around it. Origin strictly interior.
inline Polygon random_star_polygon(Rng& rng, int k, long span) {
    for (int tries = 0; tries < 200; ++tries) {
        std::vector<Point> pts;
        for (int i = 0; i < k; ++i) {
            Point p = rng.point(-span, span);
            if (p.x == 0 && p.y == 0) continue;
            bool dup = false;
            for (const auto& q : pts)
                if (same_direction(p, q)) dup = true;
            if (!dup) pts.push_back(p);
        }
        if (pts.size() < 3) continue;
        std::sort(pts.begin(), pts.end(), angle_less);
        try {
            Polygon P = Polygon::make(pts);
            if (P.locate({Rat(0), Rat(0)}) == Polygon::Where::interior) return P;
        } catch (const InputError&) {
        }
    }
    throw std::runtime_error("random_star_polygon: generation failed");
}

inline Polygon random_convex_polygon(Rng& rng, int k, long span) {
    for (int tries = 0; tries < 200; ++tries) {
        std::vector<Point> pts;
        for (int i = 0; i < 3 * k; ++i) pts.push_back(rng.point(-span, span));
        Hull h = convex_hull(pts);
        if (h.dim() == 2 && h.poly().size() >= 3) return h.poly();
    }
    throw std::runtime_error("random_convex_polygon: generation failed");
}

} // namespace ncvx::testutil

#endif
