#ifndef NCVX_RATIONAL_HPP
#define NCVX_RATIONAL_HPP

#include <gmpxx.h>
#include <string>

namespace ncvx {

/// Exact arbitrary-precision rational. All coordinates and predicates in this
/// library are computed over Rat; there is no floating point on any decision
/// path.
using Rat = mpq_class;

/// Parse "p/q" or "p" (optionally signed). Result is canonicalized.
Rat parse_rat(const std::string& s);

/// Canonical form: "p" when the denominator is 1, else "p/q" in lowest terms.
std::string rat_str(const Rat& r);

/// Fixed-point decimal rendering (used only for SVG output, never predicates).
std::string rat_decimal(const Rat& r, int digits);

inline int sign(const Rat& r) { return sgn(r); }

inline Rat rat_abs(const Rat& r) { return r < 0 ? Rat(-r) : r; }

inline Rat rat_min(const Rat& a, const Rat& b) { return a < b ? a : b; }
inline Rat rat_max(const Rat& a, const Rat& b) { return a < b ? b : a; }

} // namespace ncvx

#endif
