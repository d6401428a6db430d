#include "thuecert/field2adic.hpp"

#include <algorithm>
#include <stdexcept>

namespace thuecert {

MonicCubicModel MonicCubicModel::from_coefficients(const Int& B, const Int& C, const Int& D) {
    MonicCubicModel g{B, C, D, {1, B, C, D}, 0};
    g.disc_g = discriminant(g.source);
    return g;
}

MonicCubicModel monic_model(const BinaryCubicForm& f) {
    require_cubic_in_x(f);
    MonicCubicModel g{f.b, f.a * f.c, f.a * f.a * f.d, f, 0};
    // disc of the monic companion is a^2 * disc(f): the roots scale by a
    g.disc_g = f.a * f.a * discriminant(f);
    return g;
}

unsigned long v2(const Int& k) {
    if (k == 0) throw std::domain_error("v2: valuation undefined at 0");
    return mpz_scan1(k.get_mpz_t(), 0);
}

Mod2Factorization factor_mod2(const MonicCubicModel& g) {
    const int B = is_odd(g.B), C = is_odd(g.C), D = is_odd(g.D);
    const int idx = (B << 2) | (C << 1) | D;
    switch (idx) {
        case 0b000:  // X^3
            return {Mod2FactorKind::ThreeLinear, {{0, 3}}};
        case 0b001:  // (X+1)(X^2+X+1)
            return {Mod2FactorKind::LinearTimesQuadratic, {{1, 1}}};
        case 0b010:  // X(X+1)^2
            return {Mod2FactorKind::ThreeLinear, {{0, 1}, {1, 2}}};
        case 0b011:  // X^3+X+1
            return {Mod2FactorKind::Irreducible, {}};
        case 0b100:  // X^2(X+1)
            return {Mod2FactorKind::ThreeLinear, {{0, 2}, {1, 1}}};
        case 0b101:  // X^3+X^2+1
            return {Mod2FactorKind::Irreducible, {}};
        case 0b110:  // X(X^2+X+1)
            return {Mod2FactorKind::LinearTimesQuadratic, {{0, 1}}};
        default:     // (X+1)^3
            return {Mod2FactorKind::ThreeLinear, {{1, 3}}};
    }
}

const char* to_string(SplittingKind2 k) {
    return k == SplittingKind2::Inert ? "Inert" : "TotallySplit";
}

SplittingType2 splitting_type_2(const MonicCubicModel& g, unsigned depth) {
    if (depth < 2) throw std::invalid_argument("splitting_type_2: depth must be >= 2");
    if (g.disc_g == 0 || !is_perfect_square(g.disc_g)) {
        throw std::domain_error("splitting_type_2: discriminant is not a nonzero square -- not Galois");
    }
    if (!is_irreducible({1, g.B, g.C, g.D})) {
        throw std::domain_error("splitting_type_2: model polynomial is reducible");
    }

    SplittingType2 result;
    result.depth = depth;
    result.emptied_at = 0;
    result.mod2 = factor_mod2(g);

    // Lift root candidates through 2, 4, ..., 2^depth. A coherent candidate
    // tree that survives every level contains a genuine 2-adic root (Koenig's
    // lemma); an emptied level certifies that no root exists. Squareness of
    // the discriminant makes the verdict all-or-nothing: three roots or none.
    std::vector<Int> candidates;
    for (int r = 0; r <= 1; ++r) {
        if (is_even(g.eval(r))) candidates.emplace_back(r);
    }
    if (candidates.empty()) result.emptied_at = 1;
    Int half = 1;  // 2^(level-1)
    for (unsigned level = 2; level <= depth && !candidates.empty(); ++level) {
        half <<= 1;
        const Int mod = half << 1;
        std::vector<Int> next;
        for (const Int& r : candidates) {
            for (const Int& cand : {r, r + half}) {
                if (g.eval(cand) % mod == 0) next.push_back(cand);
            }
        }
        candidates = std::move(next);
        if (candidates.empty()) result.emptied_at = level;
    }

    if (candidates.empty()) {
        result.kind = SplittingKind2::Inert;
    } else {
        result.kind = SplittingKind2::TotallySplit;
        std::sort(candidates.begin(), candidates.end());
        result.witness_residues = std::move(candidates);
    }
    return result;
}

bool is_common_index_divisor_2(const MonicCubicModel& g, unsigned depth) {
    return splitting_type_2(g, depth).kind == SplittingKind2::TotallySplit;
}

Int norm_linear(const MonicCubicModel& g, const Int& u, const Int& v) {
    return ((u + g.B * v) * u + g.C * v * v) * u + g.D * v * v * v;
}

}  // namespace thuecert
