#pragma once

#include <string>

#include "thuecert/certifier.hpp"
#include "thuecert/oracle.hpp"

namespace thuecert {

// Stable JSON serializations: fixed field order, all arbitrary-precision
// integers rendered as decimal strings. Identical inputs produce
// byte-identical output.

// {"verdict": ..., "statement": ..., "hypotheses": {...}, "reasons": [...],
//  "warnings": [...], "input": {"form": ["a","b","c","d"], "k"|"t": ...}}
std::string to_json(const Certificate& cert, int indent = 2);

// {"form": [...], "k": ..., "box_bound": ..., "count": n, "solutions": [["x","y"], ...]}
std::string to_json(const SolutionSet& s, int indent = 2);

}  // namespace thuecert
