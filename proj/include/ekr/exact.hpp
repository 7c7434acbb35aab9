#pragma once

#include <cstdint>

#include <gmpxx.h>

namespace ekr {

// Arbitrary-precision integer used for every count that a formula produces.
// Backed by GMP; cheap at desk scale and immune to overflow.
using ExactInt = mpz_class;

// Exact rational for the handful of formulas with small denominators.
using Rational = mpq_class;

// C(a,b) as an exact integer; zero when b > a.
ExactInt binomial(unsigned long a, unsigned long b);

// C(a,b) in one machine word; valid for a <= 64 (max value C(64,32) < 2^61).
// Used by the ranking/enumeration kernels where GMP would be wasteful.
std::uint64_t binomial_u64(unsigned a, unsigned b);

inline Rational make_rational(ExactInt num, ExactInt den) {
    Rational q(num, den);
    q.canonicalize();
    return q;
}

inline double to_double(const ExactInt& v) { return v.get_d(); }
inline double to_double(const Rational& v) { return v.get_d(); }

}  // namespace ekr
