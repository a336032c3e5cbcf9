#pragma once

#include <gmpxx.h>

#include <string>

namespace sgspec {

using Int = mpz_class;
using Rat = mpq_class;

inline int sign_of(const Int& x) { return mpz_sgn(x.get_mpz_t()); }
inline int sign_of(const Rat& x) { return mpq_sgn(x.get_mpq_t()); }

inline Int abs_int(const Int& x) { return x < 0 ? Int(-x) : x; }

// Rational with positive denominator, already canonical via mpq_class.
inline Rat make_rat(long num, long den) {
    Rat r(num, den);
    r.canonicalize();
    return r;
}

inline bool fits_int64(const Int& x) {
    return x.fits_slong_p() || (sizeof(long) < 8 && mpz_sizeinbase(x.get_mpz_t(), 2) <= 62);
}

}  // namespace sgspec
