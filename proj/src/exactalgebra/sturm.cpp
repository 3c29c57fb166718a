// Licensed under the Apache License, Version 2.0 (see LICENSE or
// https://www.apache.org/licenses/LICENSE-2.0).

#include "weilcid/sturm.hpp"

#include <stdexcept>
#include <vector>

namespace weilcid {

namespace {

// Sturm chain entries are kept as primitive integer polynomials scaled by a
// positive constant, so every sign agrees with the rational chain
// p0 = h, p1 = h', p_{k+1} = -rem(p_{k-1}, p_k).
std::vector<IntPoly> sturm_chain(const IntPoly& h) {
  std::vector<IntPoly> chain{h, h.derivative()};
  while (chain.back().degree() > 0) {
    const IntPoly& a = chain[chain.size() - 2];
    const IntPoly& b = chain.back();
    // prem multiplies by lc(b)^(da-db+1); flip when that factor is negative.
    IntPoly r = pseudo_remainder(a, b);
    const int e = a.degree() - b.degree() + 1;
    bool negate = true;
    if (b.leading() < 0 && e % 2 == 1) negate = !negate;
    if (r.is_zero()) break;
    Integer c = r.content();
    std::vector<Integer> cs(r.coeffs());
    for (auto& x : cs) {
      mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), c.get_mpz_t());
      if (negate) x = -x;
    }
    chain.emplace_back(std::move(cs));
  }
  return chain;
}

unsigned sign_variations(const std::vector<IntPoly>& chain, const QuadSurd& x) {
  unsigned changes = 0;
  int last = 0;
  for (const auto& p : chain) {
    const int s = poly_eval_surd(p, x).sign();
    if (s == 0) continue;
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  return changes;
}

}  // namespace

unsigned sturm_count(const IntPoly& h, const QuadSurd& lo, const QuadSurd& hi) {
  if (h.is_zero()) throw std::invalid_argument("sturm_count: zero polynomial");
  if (!(lo < hi)) throw std::invalid_argument("sturm_count: empty interval");
  if (h.degree() == 0) return 0;
  if (primitive_gcd(h, h.derivative()).degree() > 0)
    throw std::invalid_argument("sturm_count: polynomial is not squarefree");
  const auto chain = sturm_chain(h);
  const unsigned vlo = sign_variations(chain, lo);
  const unsigned vhi = sign_variations(chain, hi);
  if (vhi > vlo) throw std::logic_error("sturm_count: negative root count");
  return vlo - vhi;
}

bool all_roots_real_in(const IntPoly& h, const Integer& q, long bound) {
  if (h.degree() <= 0) return true;
  const IntPoly core = squarefree_part(h);
  const QuadSurd hi(0, Rational(bound), q);
  const QuadSurd lo = -hi;
  unsigned count = sturm_count(core, lo, hi);
  if (poly_eval_surd(core, lo).sign() == 0) ++count;
  return count == static_cast<unsigned>(core.degree());
}

}  // namespace weilcid
