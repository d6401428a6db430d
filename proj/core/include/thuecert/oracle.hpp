#pragma once

#include <cstddef>
#include <map>
#include <utility>
#include <vector>

#include "thuecert/forms.hpp"

namespace thuecert {

// Box semantics throughout are max-norm: |x| <= B and |y| <= B.
struct SolutionSet {
    BinaryCubicForm form;
    Int k;
    long box_bound;
    // Lexicographically sorted, duplicate-free; every pair satisfies f(x,y) = k.
    std::vector<std::pair<Int, Int>> solutions;
};

// Exactly {(x,y) : |x| <= B, |y| <= B, f(x,y) = k}. For each y the cubic in x
// is solved by exact monotone-piece bisection (integer_roots_cubic), never by
// floating point. jobs > 1 splits the y range into stripes; the merged,
// sorted result is byte-identical to the serial one.
SolutionSet solve_box(const BinaryCubicForm& f, const Int& k, long box_bound, int jobs = 1);

// Exact multiset tally {k -> #{(x,y) in box : f(x,y) = k}}, excluding (0,0).
std::map<Int, std::size_t> represented_values(const BinaryCubicForm& f, long box_bound);

struct ValuationViolation {
    Int x, y, k;
    unsigned long v2_k;
};

// Violations are capped to keep failure output readable; total_violations
// counts all of them.
struct ValuationSweep {
    long box_bound = 0;
    std::size_t total_violations = 0;
    std::vector<ValuationViolation> violations;
    static constexpr std::size_t kMaxRecorded = 100;

    bool ok() const { return total_violations == 0; }
};

// Sweeps the whole box and reports every (x,y) whose nonzero value k has
// v2(k) != 0 (mod 3) -- the falsifiable heart of the Theorem: this list is
// empty for every hypothesis-satisfying form. Throws std::invalid_argument
// when f fails the parity/irreducibility/square-discriminant hypotheses, so
// a nonempty result always names a genuine counterexample.
ValuationSweep verify_valuation_invariant(const BinaryCubicForm& f, long box_bound);

// True iff the M-image of every solution in S still satisfies f = k (images
// may leave the box; membership is decided by direct evaluation). Throws
// std::invalid_argument when M is not an automorphism of f or S does not
// belong to f.
bool orbit_check(const BinaryCubicForm& f, const UnimodularMatrix& M, const SolutionSet& S);

}  // namespace thuecert
