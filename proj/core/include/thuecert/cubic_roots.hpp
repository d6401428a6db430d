#pragma once

#include <vector>

#include "thuecert/integer.hpp"

namespace thuecert {

// All integer roots of A x^3 + B x^2 + C x + D inside [lo, hi], ascending and
// duplicate-free. Exact throughout: the polynomial is split at its critical
// points (bracketed by integer square roots) into monotone pieces, each piece
// is bisected for a sign change, and membership is settled by exact
// evaluation. Degenerate leading coefficients (quadratic, linear, constant)
// are handled; the identically-zero polynomial returns every integer in range.
std::vector<Int> integer_roots_cubic(const Int& A, const Int& B, const Int& C,
                                     const Int& D, const Int& lo, const Int& hi);

}  // namespace thuecert
