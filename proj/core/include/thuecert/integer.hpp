#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace thuecert {

// All arithmetic in this library is exact. Int is GMP's C++ integer;
// no operation anywhere falls back to floating point.
using Int = mpz_class;

inline Int isqrt(const Int& n) {
    if (n < 0) throw std::domain_error("isqrt: negative argument");
    Int r;
    mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
    return r;
}

// floor(a / b), b != 0
inline Int floor_div(const Int& a, const Int& b) {
    Int q;
    mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

// ceil(a / b), b != 0
inline Int ceil_div(const Int& a, const Int& b) {
    Int q;
    mpz_cdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

inline bool is_odd(const Int& n) { return mpz_odd_p(n.get_mpz_t()) != 0; }
inline bool is_even(const Int& n) { return mpz_even_p(n.get_mpz_t()) != 0; }

inline std::string dec(const Int& n) { return n.get_str(10); }

}  // namespace thuecert
