#pragma once

#include <optional>
#include <utility>

#include "thuecert/integer.hpp"

namespace thuecert {

// f(x,y) = a x^3 + b x^2 y + c x y^2 + d y^3.
//
// The struct itself places no restriction on the coefficients: substitution
// closure requires a = 0 to be representable (act can produce it). Paths that
// need a genuine cubic in x (certifier, monic model, irreducibility) call
// require_cubic_in_x first.
struct BinaryCubicForm {
    Int a, b, c, d;

    friend bool operator==(const BinaryCubicForm&, const BinaryCubicForm&) = default;
};

// P x^2 + Q x y + R y^2
struct BinaryQuadraticForm {
    Int P, Q, R;

    Int discriminant() const { return Q * Q - 4 * P * R; }

    friend bool operator==(const BinaryQuadraticForm&, const BinaryQuadraticForm&) = default;
};

// Row-major 2x2 integer matrix (p q; r s) acting on column vectors.
struct UnimodularMatrix {
    Int p, q, r, s;

    Int det() const { return p * s - q * r; }
    bool unimodular() const {
        const Int d = det();
        return d == 1 || d == -1;
    }
    bool is_identity() const { return p == 1 && q == 0 && r == 0 && s == 1; }
    bool is_plus_minus_identity() const {
        return q == 0 && r == 0 && ((p == 1 && s == 1) || (p == -1 && s == -1));
    }

    UnimodularMatrix operator*(const UnimodularMatrix& o) const {
        return {p * o.p + q * o.r, p * o.q + q * o.s,
                r * o.p + s * o.r, r * o.q + s * o.s};
    }

    // Exact inverse; requires det = +-1.
    UnimodularMatrix inverse() const;

    std::pair<Int, Int> apply(const Int& x, const Int& y) const {
        return {p * x + q * y, r * x + s * y};
    }

    friend bool operator==(const UnimodularMatrix&, const UnimodularMatrix&) = default;
};

inline const UnimodularMatrix kIdentity{1, 0, 0, 1};

// Throws std::invalid_argument when f.a == 0.
void require_cubic_in_x(const BinaryCubicForm& f);

Int evaluate(const BinaryCubicForm& f, const Int& x, const Int& y);

// 18abcd - 4b^3d + b^2c^2 - 4ac^3 - 27a^2d^2
Int discriminant(const BinaryCubicForm& f);

// (b^2 - 3ac, bc - 9ad, c^2 - 3bd). Its discriminant is -3*discriminant(f).
BinaryQuadraticForm hessian(const BinaryCubicForm& f);

// (f∘M)(x,y) = f(px+qy, rx+sy). Throws std::invalid_argument when det(M) is
// not +-1. May produce a result with a = 0.
BinaryCubicForm act(const BinaryCubicForm& f, const UnimodularMatrix& M);

// True iff f(X,1) is irreducible over Q. Degree 3, so this is exactly the
// rational-root test; decided through the monic companion X^3+bX^2+acX+a^2d,
// whose integer roots w correspond to rational roots w/a of f(X,1).
// Requires a != 0.
bool is_irreducible(const BinaryCubicForm& f);

// n = s^2 for some integer s >= 0. Exact integer square root; negative n -> false.
bool is_perfect_square(const Int& n);

// Ayad's criterion, stated for this Hessian convention: true iff H(f) != 0 and
// H(f) = lambda * g with g primitive of discriminant -3 (the one-class
// discriminant of x^2+xy+y^2). Forms passing this test have a cyclic
// order-3 automorphism group; cross-validated against
// find_order3_automorphism in the test suite.
bool hessian_cyclic_test(const BinaryCubicForm& f);

// Exhaustive search over entries |p|,|q|,|r|,|s| <= bound for M != +-I with
// det M = +-1, f∘M = f and M^3 = +-I. Candidates are scanned in lexicographic
// order on (p,q,r,s) so the returned matrix is deterministic.
std::optional<UnimodularMatrix> find_order3_automorphism(const BinaryCubicForm& f, long bound);

}  // namespace thuecert
