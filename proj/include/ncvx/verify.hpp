#ifndef NCVX_VERIFY_HPP
#define NCVX_VERIFY_HPP

#include "ncvx/cell.hpp"
#include "ncvx/invisibility.hpp"
#include "ncvx/region.hpp"
#include "ncvx/witness.hpp"

#include <string>
#include <vector>

namespace ncvx {

struct CellReport {
    bool ok = true;
    std::vector<std::string> violations;
};

/// (a) the representation is a valid convex set, (b) the base lies in cl X,
/// (c) every removed feature hitting the cell is fully excluded.
CellReport verify_cell(const ConvexCell& cell, const PuncturedRegion& X);

struct CoverReport {
    bool ok = true;
    bool area_ok = true;
    std::vector<Point> uncovered;
    std::vector<std::string> violations;
};

/// Every witness in some cell; the closed 2D cells tile S by exact area.
CoverReport verify_cover(const std::vector<ConvexCell>& cells, const PuncturedRegion& X,
                         const WitnessSet& W);

/// Recompute every claim of a certificate from X alone.
bool replay_certificate(const Certificate& c, const PuncturedRegion& X);

} // namespace ncvx

#endif
