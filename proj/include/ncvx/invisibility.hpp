#ifndef NCVX_INVISIBILITY_HPP
#define NCVX_INVISIBILITY_HPP

#include "ncvx/cell.hpp"
#include "ncvx/region.hpp"
#include "ncvx/witness.hpp"

#include <optional>
#include <vector>

namespace ncvx {

/// G(X) restricted to a finite witness set: edge(u,v) iff u and v do not see
/// each other via X.
struct InvisibilityGraph {
    WitnessSet witness;
    std::vector<std::vector<bool>> adj;

    size_t size() const { return witness.size(); }
    bool edge(size_t i, size_t j) const { return adj[i][j]; }
};

InvisibilityGraph build_graph(const PuncturedRegion& X, WitnessSet W);

/// Replayable lower-bound evidence. All claims are re-checkable from X alone.
struct Certificate {
    enum class Kind { clique, odd_circuit, convex_partition_infeasible, sector_counting };
    Kind kind;
    std::string measure;        // "alpha", "beta" or "gamma"
    int bound = 0;              // implied lower bound for that measure
    std::vector<Point> points;  // clique members / circuit in order / partition witnesses

    // sector-counting payload
    int sectors = 0;
    int per_sector_lb = 0;
    int max_sectors_per_convex = 0;
    std::optional<Point> center;
    std::vector<Point> rays;  // fan of sector rays around the center, cyclic order
    std::vector<std::vector<Point>> sector_circuits;
};

struct CliqueResult {
    int k;
    Certificate cert;
    std::vector<size_t> members;
};
/// Exact maximum clique (branch and bound with a greedy coloring bound).
CliqueResult clique_number(const InvisibilityGraph& G);

struct ChromaticResult {
    int k;
    std::vector<int> coloring;
};
/// Exact chromatic number; throws SizeLimit beyond the budget.
ChromaticResult chromatic_number(const InvisibilityGraph& G, size_t budget = 64);

/// Shortest odd circuit, or nullopt for bipartite graphs.
std::optional<Certificate> find_odd_circuit(const InvisibilityGraph& G);

struct PartitionResult {
    int k;
    Certificate cert;
    std::vector<std::vector<size_t>> classes;
};
/// Minimum k with W partitionable into k classes whose hulls lie in X.
/// Exhaustive with pruning; throws SizeLimit beyond the budget.
PartitionResult convex_partition_number(const PuncturedRegion& X, const WitnessSet& W,
                                        size_t budget = 16);

/// conv(pts) subset of X, exact.
bool hull_in_region(const PuncturedRegion& X, const std::vector<Point>& pts);

struct SectorBound {
    int k;
    Certificate cert;
};
/// gamma lower bound by the sector-incidence count: s sectors around center,
/// each certified to meet >= per_sector_lb covering sets, and any convex
/// subset avoiding center meets at most m consecutive sectors.
Result<SectorBound> sector_counting_bound(const PuncturedRegion& X,
                                          const std::vector<ConvexCell>& sectors,
                                          int per_sector_lb, const Point& center,
                                          const WitnessSet& W);

} // namespace ncvx

#endif
