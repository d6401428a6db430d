#include "thuecert/forms.hpp"

#include <stdexcept>

#include "thuecert/cubic_roots.hpp"

namespace thuecert {

UnimodularMatrix UnimodularMatrix::inverse() const {
    const Int dt = det();
    if (dt == 1) return {s, -q, -r, p};
    if (dt == -1) return {-s, q, r, -p};
    throw std::invalid_argument("UnimodularMatrix::inverse: determinant is not +-1");
}

void require_cubic_in_x(const BinaryCubicForm& f) {
    if (f.a == 0) {
        throw std::invalid_argument("binary cubic form must have a != 0 on this path");
    }
}

Int evaluate(const BinaryCubicForm& f, const Int& x, const Int& y) {
    // Horner in x with y-weighted coefficients
    return ((f.a * x + f.b * y) * x + f.c * y * y) * x + f.d * y * y * y;
}

Int discriminant(const BinaryCubicForm& f) {
    const Int &a = f.a, &b = f.b, &c = f.c, &d = f.d;
    return 18 * a * b * c * d - 4 * b * b * b * d + b * b * c * c -
           4 * a * c * c * c - 27 * a * a * d * d;
}

BinaryQuadraticForm hessian(const BinaryCubicForm& f) {
    const Int &a = f.a, &b = f.b, &c = f.c, &d = f.d;
    return {b * b - 3 * a * c, b * c - 9 * a * d, c * c - 3 * b * d};
}

BinaryCubicForm act(const BinaryCubicForm& f, const UnimodularMatrix& M) {
    if (!M.unimodular()) {
        throw std::invalid_argument("act: matrix is not unimodular");
    }
    const Int &a = f.a, &b = f.b, &c = f.c, &d = f.d;
    const Int &p = M.p, &q = M.q, &r = M.r, &s = M.s;
    BinaryCubicForm g;
    g.a = a * p * p * p + b * p * p * r + c * p * r * r + d * r * r * r;
    g.b = 3 * a * p * p * q + b * (p * p * s + 2 * p * q * r) +
          c * (2 * p * r * s + q * r * r) + 3 * d * r * r * s;
    g.c = 3 * a * p * q * q + b * (2 * p * q * s + q * q * r) +
          c * (p * s * s + 2 * q * r * s) + 3 * d * r * s * s;
    g.d = a * q * q * q + b * q * q * s + c * q * s * s + d * s * s * s;
    return g;
}

bool is_irreducible(const BinaryCubicForm& f) {
    require_cubic_in_x(f);
    // Rational roots p/q of f(X,1) correspond to integer roots w = a*(p/q) of
    // the monic companion X^3 + b X^2 + ac X + a^2 d (w is an algebraic
    // integer, so a rational w is an integer). Cauchy bound on |w|.
    const Int B = f.b, C = f.a * f.c, D = f.a * f.a * f.d;
    Int bound = abs(B);
    if (abs(C) > bound) bound = abs(C);
    if (abs(D) > bound) bound = abs(D);
    bound += 1;
    return integer_roots_cubic(1, B, C, D, -bound, bound).empty();
}

bool is_perfect_square(const Int& n) {
    if (n < 0) return false;
    const Int s = isqrt(n);
    return s * s == n;
}

bool hessian_cyclic_test(const BinaryCubicForm& f) {
    const BinaryQuadraticForm H = hessian(f);
    if (H.P == 0 && H.Q == 0 && H.R == 0) return false;  // degenerate
    Int content = gcd(gcd(H.P, H.Q), H.R);
    // lambda = content; the primitive part g must have discriminant exactly
    // -3, the one-class discriminant of x^2+xy+y^2. (The paper states the
    // criterion for a different Hessian normalization; this target is pinned
    // by cross-validation against the exhaustive automorphism search.)
    const Int P = H.P / content, Q = H.Q / content, R = H.R / content;
    return Q * Q - 4 * P * R == -3;
}

std::optional<UnimodularMatrix> find_order3_automorphism(const BinaryCubicForm& f, long bound) {
    if (bound < 1) throw std::invalid_argument("find_order3_automorphism: bound must be >= 1");
    // Lexicographic scan over (p,q,r,s) keeps ties deterministic.
    for (long p = -bound; p <= bound; ++p) {
        for (long q = -bound; q <= bound; ++q) {
            for (long r = -bound; r <= bound; ++r) {
                for (long s = -bound; s <= bound; ++s) {
                    const long det = p * s - q * r;
                    if (det != 1 && det != -1) continue;
                    UnimodularMatrix M{p, q, r, s};
                    if (M.is_plus_minus_identity()) continue;
                    const UnimodularMatrix M3 = M * M * M;
                    if (!M3.is_plus_minus_identity()) continue;
                    if (act(f, M) == f) return M;
                }
            }
        }
    }
    return std::nullopt;
}

}  // namespace thuecert
