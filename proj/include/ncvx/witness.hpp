#ifndef NCVX_WITNESS_HPP
#define NCVX_WITNESS_HPP

#include "ncvx/region.hpp"

#include <vector>

namespace ncvx {

enum class Provenance { vertex, feature_endpoint, midpoint, offset, grid };

struct Witness {
    Point p;
    Provenance tag;
};

struct WitnessSet {
    std::vector<Witness> pts;

    size_t size() const { return pts.size(); }
    const Point& operator[](size_t i) const { return pts[i].p; }
    std::vector<Point> points() const;
};

/// Deterministic witness sample of X: vertices, feature endpoints, midpoints
/// of the boundary pieces of X, inward offsets around every removed feature,
/// and a density x density grid over the bounding box. The offset radius is
/// (minimum pairwise L-infinity distance among vertices and feature
/// endpoints)/8, an exact rational.
WitnessSet generate_witnesses(const PuncturedRegion& X, int density);

} // namespace ncvx

#endif
