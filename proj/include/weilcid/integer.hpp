// Licensed under the Apache License, Version 2.0 (see LICENSE or
// https://www.apache.org/licenses/LICENSE-2.0).

#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace weilcid {

using Integer = mpz_class;
using Rational = mpq_class;

inline Integer pow(const Integer& base, unsigned long exp) {
  Integer r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exp);
  return r;
}

inline Integer pow_ui(unsigned long base, unsigned long exp) {
  Integer r;
  mpz_ui_pow_ui(r.get_mpz_t(), base, exp);
  return r;
}

/// floor(sqrt(n)) for n >= 0.
inline Integer isqrt(const Integer& n) {
  Integer r;
  mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
  return r;
}

/// ceil(sqrt(n)) for n >= 0.
inline Integer isqrt_ceil(const Integer& n) {
  Integer r = isqrt(n);
  if (r * r < n) ++r;
  return r;
}

inline bool is_perfect_square(const Integer& n) {
  return n >= 0 && mpz_perfect_square_p(n.get_mpz_t()) != 0;
}

inline std::size_t bit_length(const Integer& n) {
  return n == 0 ? 0 : mpz_sizeinbase(n.get_mpz_t(), 2);
}

inline Integer lcm(const Integer& a, const Integer& b) {
  Integer r;
  mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

inline Integer gcd(const Integer& a, const Integer& b) {
  Integer r;
  mpz_gcd(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

/// Exponent of the prime p in n (n != 0).
inline unsigned valuation(Integer n, const Integer& p) {
  unsigned v = 0;
  if (n == 0) return v;
  while (mpz_divisible_p(n.get_mpz_t(), p.get_mpz_t())) {
    mpz_divexact(n.get_mpz_t(), n.get_mpz_t(), p.get_mpz_t());
    ++v;
  }
  return v;
}

inline bool divides(const Integer& d, const Integer& n) {
  return mpz_divisible_p(n.get_mpz_t(), d.get_mpz_t()) != 0;
}

inline std::uint64_t to_u64(const Integer& n) {
  static_assert(sizeof(unsigned long) == 8, "64-bit unsigned long expected");
  return n.get_ui();
}

inline bool fits_u64(const Integer& n) { return n >= 0 && mpz_fits_ulong_p(n.get_mpz_t()); }

inline Integer from_u64(std::uint64_t v) { return Integer(static_cast<unsigned long>(v)); }

}  // namespace weilcid
