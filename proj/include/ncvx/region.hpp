#ifndef NCVX_REGION_HPP
#define NCVX_REGION_HPP

#include "ncvx/cell.hpp"
#include "ncvx/polygon.hpp"

#include <optional>
#include <vector>

namespace ncvx {

enum class FeatureLoc { interior, boundary };

/// One missing piece of cl X, normalized: purely interior or purely boundary,
/// pairwise disjoint from every other feature.
struct Feature {
    Segment shape;  // degenerate => removed point (closure flags then irrelevant)
    FeatureLoc loc = FeatureLoc::boundary;

    bool is_point() const { return shape.degenerate(); }
    bool contains(const Point& p) const {
        return is_point() ? shape.a == p : shape.contains(p);
    }
};

/// X = (S ∪ antennae) \ M.  S is a simple polygon (absent for purely
/// 1-dimensional regions); antennae are closed segments of cl X with empty
/// interior (the Theorem-B "not 2-dimensional" strata).  Immutable after
/// normalize(); all queries are pure.
class PuncturedRegion {
public:
    static PuncturedRegion normalize(std::optional<Polygon> S, std::vector<Segment> antennae,
                                     std::vector<Segment> raw_features);

    const std::optional<Polygon>& poly() const { return S_; }
    const std::vector<Segment>& antennae() const { return antennae_; }
    const std::vector<Feature>& features() const { return features_; }

    std::vector<Feature> interior_features() const;   // M_i
    std::vector<Feature> boundary_features() const;   // M_b
    bool has_antenna() const { return !antennae_.empty(); }

    /// p in cl X = S ∪ antennae.
    bool in_closure(const Point& p) const;
    /// p in X (closure minus the removed features).
    bool contains(const Point& p) const;
    /// Open segment (u,v) inside X; u==v gives true (empty interval).
    bool sees(const Point& u, const Point& v) const;

    /// M_b covers all of bd S.
    bool boundary_fully_removed() const;
    /// No boundary feature at all.
    bool boundary_intact() const { return boundary_features().empty(); }

    /// X ∩ aff(a,b) as parameters along that line (frame through(a,b)).
    IntervalSet line_portion(const LineFrame& f) const;

private:
    std::optional<Polygon> S_;
    std::vector<Segment> antennae_;
    std::vector<Feature> features_;
};

/// Reflex vertices of S. When they are in convex position they are returned in
/// clockwise order along bd(conv Q) starting at the lexicographically smallest;
/// otherwise (not a Valentine structure) in boundary order.
std::vector<Point> lnc_points(const Polygon& S);

/// p in cl(int S): false exactly on antenna points off the polygon.
bool is_two_dimensional_at(const PuncturedRegion& X, const Point& p);

struct StarCell {
    Point center;
    ConvexCell cell;
};

/// Outcome carrier: either a value or a refutation of the operation's
/// precondition (typically evidence against alpha(X) <= 2), with witness data.
struct Refutation {
    std::string code;
    std::string message;
    std::vector<Point> witness;
};

template <typename T>
struct Result {
    std::optional<T> value;
    std::optional<Refutation> refutation;

    bool ok() const { return value.has_value(); }
    const T& operator*() const { return *value; }
    T& operator*() { return *value; }
    const T* operator->() const { return &*value; }

    static Result success(T v) { return {std::move(v), std::nullopt}; }
    static Result fail(Refutation r) { return {std::nullopt, std::move(r)}; }
};

/// Build a cell from a convex base: exclusions become (bd base \ X) plus
/// extra_exclusions. When an edge's retained set is disconnected, must_keep
/// parts select the single retained interval; a must_keep part overlapping a
/// removed piece is a contradiction and fails.
Result<ConvexCell> make_cell(std::variant<Point, Segment, Polygon> base,
                             const PuncturedRegion& X,
                             const std::vector<Segment>& extra_exclusions = {},
                             const std::vector<Segment>& must_keep = {},
                             const std::string& tag = "");

/// Star of a: the set {x in X : [a,x] subset X} under the Theorem-A
/// precondition (it is then convex). Fails with NotConvexStar when the
/// computed candidate does not validate.
Result<StarCell> star(const PuncturedRegion& X, const Point& a);

} // namespace ncvx

#endif
