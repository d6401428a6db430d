#include "thuecert/cubic_roots.hpp"

#include <algorithm>

namespace thuecert {
namespace {

Int eval_cubic(const Int& A, const Int& B, const Int& C, const Int& D, const Int& x) {
    return ((A * x + B) * x + C) * x + D;
}

// Roots of a monotone piece [lo, hi] (nondecreasing when inc, else
// nonincreasing). At most one integer root; sign-change bisection plus an
// exact final evaluation.
void bisect_piece(const Int& A, const Int& B, const Int& C, const Int& D,
                  Int lo, Int hi, bool inc, std::vector<Int>& out) {
    if (lo > hi) return;
    const Int flo = eval_cubic(A, B, C, D, lo);
    const Int fhi = eval_cubic(A, B, C, D, hi);
    if (inc) {
        if (flo > 0 || fhi < 0) return;
        // smallest x with f(x) >= 0
        while (lo < hi) {
            const Int mid = floor_div(lo + hi, 2);
            if (eval_cubic(A, B, C, D, mid) >= 0) {
                hi = mid;
            } else {
                lo = mid + 1;
            }
        }
    } else {
        if (flo < 0 || fhi > 0) return;
        // largest x with f(x) >= 0
        while (lo < hi) {
            const Int mid = ceil_div(lo + hi, 2);
            if (eval_cubic(A, B, C, D, mid) >= 0) {
                lo = mid;
            } else {
                hi = mid - 1;
            }
        }
    }
    if (eval_cubic(A, B, C, D, lo) == 0) out.push_back(lo);
}

void roots_quadratic(const Int& B, const Int& C, const Int& D,
                     const Int& lo, const Int& hi, std::vector<Int>& out) {
    // B x^2 + C x + D = 0, B != 0
    const Int disc = C * C - 4 * B * D;
    if (disc < 0) return;
    const Int s = isqrt(disc);
    if (s * s != disc) return;
    const Int den = 2 * B;
    for (const Int& num : {-C + s, -C - s}) {
        if (num % den == 0) {
            const Int x = num / den;
            if (lo <= x && x <= hi) out.push_back(x);
        }
    }
}

}  // namespace

std::vector<Int> integer_roots_cubic(const Int& A, const Int& B, const Int& C,
                                     const Int& D, const Int& lo, const Int& hi) {
    std::vector<Int> out;
    if (lo > hi) return out;

    if (A == 0) {
        if (B != 0) {
            roots_quadratic(B, C, D, lo, hi, out);
        } else if (C != 0) {
            if (D % C == 0) {
                const Int x = -D / C;
                if (lo <= x && x <= hi) out.push_back(x);
            }
        } else if (D == 0) {
            // identically zero: every integer in range
            for (Int x = lo; x <= hi; ++x) out.push_back(x);
            return out;
        }
        std::sort(out.begin(), out.end());
        out.erase(std::unique(out.begin(), out.end()), out.end());
        return out;
    }

    // Normalize to positive leading coefficient; roots are unchanged.
    const Int a = A > 0 ? A : -A;
    const Int b = A > 0 ? B : -B;
    const Int c = A > 0 ? C : -C;
    const Int d = A > 0 ? D : -D;

    // Critical points of a x^3 + b x^2 + c x + d are the roots of
    // 3a x^2 + 2b x + c, i.e. x = (-b +- sqrt(E)) / (3a) with E = b^2 - 3ac.
    const Int E = b * b - 3 * a * c;
    if (E <= 0) {
        // nondecreasing on all of R
        bisect_piece(a, b, c, d, lo, hi, /*inc=*/true, out);
        std::sort(out.begin(), out.end());
        out.erase(std::unique(out.begin(), out.end()), out.end());
        return out;
    }

    const Int s0 = isqrt(E);
    const bool exact = (s0 * s0 == E);
    const Int den = 3 * a;

    // Integer brackets fl <= x_crit <= ce for each critical point; the few
    // integers strictly between the brackets are tested directly.
    Int fl1, ce1, fl2, ce2;
    if (exact) {
        fl1 = floor_div(-b - s0, den);
        ce1 = ceil_div(-b - s0, den);
        fl2 = floor_div(-b + s0, den);
        ce2 = ceil_div(-b + s0, den);
    } else {
        fl1 = floor_div(-b - s0 - 1, den);
        ce1 = ceil_div(-b - s0, den);
        fl2 = floor_div(-b + s0, den);
        ce2 = ceil_div(-b + s0 + 1, den);
    }

    // increasing up to the local max, decreasing between, increasing after
    bisect_piece(a, b, c, d, lo, std::min(hi, fl1), true, out);
    bisect_piece(a, b, c, d, std::max(lo, ce1), std::min(hi, fl2), false, out);
    bisect_piece(a, b, c, d, std::max(lo, ce2), hi, true, out);
    for (const Int* gap : {&fl1, &fl2}) {
        const Int& gl = *gap;
        const Int& gr = (gap == &fl1) ? ce1 : ce2;
        for (Int x = gl + 1; x < gr; ++x) {
            if (x < lo || x > hi) continue;
            if (eval_cubic(a, b, c, d, x) == 0) out.push_back(x);
        }
    }

    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

}  // namespace thuecert
