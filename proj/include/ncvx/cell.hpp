#ifndef NCVX_CELL_HPP
#define NCVX_CELL_HPP

#include "ncvx/polygon.hpp"

#include <string>
#include <variant>
#include <vector>

namespace ncvx {

/// A convex subset of the plane: a closed convex base (polygon, segment or
/// point) minus declared boundary exclusions. The represented set is convex
/// exactly when on every edge of the base the retained part is empty, a single
/// point, or a single subsegment; validate_shape() checks that rule.
struct ConvexCell {
    std::variant<Point, Segment, Polygon> base;
    std::vector<Segment> exclusions;  // removed parts of bd(base); degenerate = point
    std::string tag;                  // provenance label, e.g. "E:leaf3"

    int base_dim() const;
    bool contains(const Point& p) const;
    /// Empty list = the representation is a valid nonempty convex set.
    std::vector<std::string> validate_shape() const;
    /// Vertices of the base (used for witness seeding and rendering).
    std::vector<Point> base_points() const;
};

/// Retained portion of one base edge after exclusions, as parameters along it.
IntervalSet retained_on_edge(const Segment& edge, const std::vector<Segment>& exclusions);

} // namespace ncvx

#endif
