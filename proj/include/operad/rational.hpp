#pragma once

// Exact arithmetic backbone: arbitrary-precision integers and rationals
// (GMP). mpq_class keeps every rational in canonical reduced form, which
// bounds entry growth in the elimination routines.

#include <gmpxx.h>

#include <cstddef>
#include <string>

namespace operad {

using Int = mpz_class;
using Rat = mpq_class;

inline Int binomial(long n, long k) {
    if (k < 0 || k > n) return 0;
    Int r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n),
                 static_cast<unsigned long>(k));
    return r;
}

inline Int factorial(long n) {
    Int r;
    mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
    return r;
}

inline std::string to_string(const Int& v) { return v.get_str(); }
inline std::string to_string(const Rat& v) { return v.get_str(); }

// Parses "p" or "p/q"; throws std::invalid_argument on malformed input.
inline Rat parse_rational(const std::string& s) {
    Rat r;
    if (r.set_str(s, 10) != 0) throw std::invalid_argument("bad rational: " + s);
    r.canonicalize();
    return r;
}

}  // namespace operad
