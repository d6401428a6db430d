#pragma once

#include <optional>
#include <string>
#include <vector>

#include "thuecert/forms.hpp"

namespace thuecert {

// Pure function of (f, k): every field is recomputable from the input.
// The v2_k fields are absent when k = 0; the v2_t fields are used only by
// the Mordell-equation certifier, where the valuation condition is v2(t) = 1.
struct HypothesisReport {
    bool a_odd = false;
    bool bc_plus_d_odd = false;
    bool irreducible = false;
    bool disc_square = false;
    Int disc_value;
    std::optional<unsigned long> v2_k;
    std::optional<bool> v2_not_multiple_of_3;
    std::optional<unsigned long> v2_t;
    std::optional<bool> v2_t_equals_1;

    bool all_theorem1() const {
        return a_odd && bc_plus_d_odd && irreducible && disc_square &&
               v2_not_multiple_of_3.value_or(false);
    }
};

enum class Verdict { NoSolutions, NotApplicable };
enum class Statement { Thue, Homogeneous, Mordell };

const char* to_string(Verdict v);
const char* to_string(Statement s);

// NoSolutions is only ever emitted when every hypothesis holds; NotApplicable
// carries the failed hypotheses in `reasons` and never claims solutions exist.
struct Certificate {
    Verdict verdict;
    Statement statement;
    HypothesisReport report;
    std::vector<std::string> reasons;
    std::vector<std::string> warnings;
    BinaryCubicForm input_form;  // Mordell: coefficients of the cubic in x
    Int input_k;                 // k, or t for Mordell
};

// Evaluates the Theorem hypotheses for f(x,y) = k: a odd, bc+d odd, f(X,1)
// irreducible with square discriminant, and 3 not dividing v2(k). v2(0) is
// undefined, so k = 0 leaves the valuation fields absent (3 | 0 means odd k
// always fails the valuation condition). Requires a != 0.
HypothesisReport check_hypotheses(const BinaryCubicForm& f, const Int& k);

// Certificate for a x^3 + b x^2 y + c x y^2 + d y^3 = k having no integer
// solution. Throws std::invalid_argument on k = 0: the k = 0 analysis is
// trivial (an irreducible form vanishes only at (0,0)).
Certificate certify_thue(const BinaryCubicForm& f, const Int& k);

// Certificate for f(x,y) = k z^3 having only the solution (0,0,0):
// v2(k z^3) = v2(k) + 3 v2(z) = v2(k) (mod 3) for z != 0 reduces to the Thue
// case, and z = 0 forces f(x,y) = 0, impossible for irreducible f.
Certificate certify_homogeneous(const BinaryCubicForm& f, const Int& k);

// Certificate for a x^3 + b x^2 + c x + d = t y^2 having no integer solution:
// requires v2(t) = 1, a odd, bc+d odd, and the shifted polynomial
// a X^3 + b X^2 + c X + (d+t) irreducible with square discriminant.
// Throws std::invalid_argument on t = 0 or a = 0.
Certificate certify_mordell(const Int& a, const Int& b, const Int& c,
                            const Int& d, const Int& t);

}  // namespace thuecert
