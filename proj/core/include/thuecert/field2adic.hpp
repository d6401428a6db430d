#pragma once

#include <vector>

#include "thuecert/forms.hpp"

namespace thuecert {

inline constexpr unsigned kDefaultLiftDepth = 64;

// Monic integral model g(X) = X^3 + B X^2 + C X + D of the cubic field cut
// out by f: for omega = a*theta with f(theta,1) = 0, the minimal polynomial
// is (B, C, D) = (b, ac, a^2 d). Carries disc_g = a^2 * discriminant(f).
struct MonicCubicModel {
    Int B, C, D;
    BinaryCubicForm source;
    Int disc_g;

    // Model taken directly from monic coefficients; source is (1, B, C, D).
    static MonicCubicModel from_coefficients(const Int& B, const Int& C, const Int& D);

    Int eval(const Int& x) const { return ((x + B) * x + C) * x + D; }
};

// Requires f.a != 0.
MonicCubicModel monic_model(const BinaryCubicForm& f);

// 2-adic valuation. Throws std::domain_error on k = 0 (never a sentinel).
unsigned long v2(const Int& k);

enum class Mod2FactorKind { Irreducible, LinearTimesQuadratic, ThreeLinear };

struct Mod2Factorization {
    Mod2FactorKind kind;
    // Roots in F_2 with multiplicities, empty for the irreducible case.
    // ThreeLinear always carries multiplicities: F_2 has only two monic linear
    // polynomials, so three distinct linear factors cannot occur.
    std::vector<std::pair<int, int>> linear_roots;
};

// Table lookup over the 8 monic cubics mod 2.
Mod2Factorization factor_mod2(const MonicCubicModel& g);

enum class SplittingKind2 { Inert, TotallySplit };

const char* to_string(SplittingKind2 k);

// Verdict plus the data that certifies it. For a cyclic cubic (irreducible g
// with square discriminant) the prime 2 is unramified, so only these two
// splitting types exist.
struct SplittingType2 {
    SplittingKind2 kind;
    unsigned depth;                   // lifting depth t that was run
    unsigned emptied_at;              // Inert: first level with no residue surviving
    std::vector<Int> witness_residues;  // TotallySplit: residues r mod 2^t, g(r) = 0 mod 2^t
    Mod2Factorization mod2;           // factorization type mod 2
};

// Decides how 2 splits by iterative root lifting modulo 2, 4, ..., 2^depth:
// a residue set that survives every level certifies a 2-adic root (hence
// three of them, by the Galois action) and the verdict TotallySplit; a set
// that empties certifies Inert. Throws std::domain_error when disc_g is zero
// or not a perfect square ("not Galois") or g is reducible. An even square
// discriminant is accepted: squareness already forces the field to be cyclic
// over Q, where 2 never ramifies, so the even part belongs to the index of
// Z[omega], not to the field.
SplittingType2 splitting_type_2(const MonicCubicModel& g, unsigned depth = kDefaultLiftDepth);

// True iff 2 splits completely. Three degree-1 primes above 2 can never be
// matched by a factorization mod 2 (only two monic linear polynomials exist
// over F_2), so 2 then divides the index of every generator of the field.
bool is_common_index_divisor_2(const MonicCubicModel& g, unsigned depth = kDefaultLiftDepth);

// u^3 + B u^2 v + C u v^2 + D v^3, the field norm of u - v*omega.
// Satisfies a^2 * f(x,y) = norm_linear(monic_model(f), a*x, y) identically.
Int norm_linear(const MonicCubicModel& g, const Int& u, const Int& v);

}  // namespace thuecert
