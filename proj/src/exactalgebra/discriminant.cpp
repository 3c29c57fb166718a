// Licensed under the Apache License, Version 2.0 (see LICENSE or
// https://www.apache.org/licenses/LICENSE-2.0).

#include "weilcid/discriminant.hpp"

#include <stdexcept>
#include <utility>

#include "weilcid/error.hpp"

namespace weilcid {

namespace {

IntPoly divide_by_scalar(const IntPoly& p, const Integer& d) {
  std::vector<Integer> c(p.coeffs());
  for (auto& x : c) {
    if (!divides(d, x)) throw InvariantError("subresultant step is not an exact division");
    mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), d.get_mpz_t());
  }
  return IntPoly(std::move(c));
}

Integer exact_quotient(const Integer& a, const Integer& b) {
  if (!divides(b, a)) throw InvariantError("subresultant step is not an exact division");
  Integer r;
  mpz_divexact(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

}  // namespace

// Collins' subresultant algorithm in the form of Cohen, GTM 138, Alg. 3.3.7.
Integer resultant(const IntPoly& a_in, const IntPoly& b_in) {
  if (a_in.is_zero() || b_in.is_zero()) return 0;
  IntPoly a = a_in;
  IntPoly b = b_in;
  int s = 1;
  if (a.degree() < b.degree()) {
    std::swap(a, b);
    if (a.degree() % 2 == 1 && b.degree() % 2 == 1) s = -1;
  }
  if (b.degree() == 0) return s * pow(b.leading(), a.degree());

  const Integer ca = a.content();
  const Integer cb = b.content();
  a = divide_by_scalar(a, ca);
  b = divide_by_scalar(b, cb);
  Integer g = 1;
  Integer h = 1;
  const Integer t = pow(ca, b.degree()) * pow(cb, a.degree());

  while (true) {
    const int delta = a.degree() - b.degree();
    if (a.degree() % 2 == 1 && b.degree() % 2 == 1) s = -s;
    IntPoly r = pseudo_remainder(a, b);
    a = std::move(b);
    if (r.is_zero()) return 0;
    b = divide_by_scalar(r, g * pow(h, delta));
    g = a.leading();
    // h <- h^(1-delta) g^delta
    if (delta != 0) h = exact_quotient(pow(g, delta), pow(h, delta - 1));
    if (b.degree() == 0) {
      const int da = a.degree();
      Integer hh = exact_quotient(pow(b.leading(), da), pow(h, da - 1));
      return s * t * hh;
    }
  }
}

Integer discriminant(const IntPoly& f) {
  const int n = f.degree();
  if (n < 1) throw std::invalid_argument("discriminant: polynomial must be nonconstant");
  Integer r = resultant(f, f.derivative());
  Integer d = exact_quotient(r, f.leading());
  if ((n * (n - 1) / 2) % 2 == 1) d = -d;
  return d;
}

}  // namespace weilcid
