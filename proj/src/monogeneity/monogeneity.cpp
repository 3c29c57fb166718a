// Licensed under the Apache License, Version 2.0 (see LICENSE or
// https://www.apache.org/licenses/LICENSE-2.0).

#include "weilcid/monogeneity.hpp"

#include <map>
#include <mutex>
#include <shared_mutex>
#include <stdexcept>

#include "weilcid/error.hpp"
#include "weilcid/factorize.hpp"

namespace weilcid {

const char* const kHypothesisNote =
    "Verdicts assume the mod-n Galois image is all of GSp_2g(Z/nZ) and that End(A) = Z[pi,v]; "
    "neither hypothesis is verified by this tool.";

namespace {

// Read-mostly memo table.
template <class Key>
class Memo {
 public:
  template <class F>
  Integer get(const Key& key, F compute) {
    {
      std::shared_lock lock(mu_);
      auto it = table_.find(key);
      if (it != table_.end()) return it->second;
    }
    Integer value = compute();
    std::unique_lock lock(mu_);
    return table_.emplace(key, std::move(value)).first->second;
  }

 private:
  std::shared_mutex mu_;
  std::map<Key, Integer> table_;
};

void require_prime_field(const WeilPoly& w) {
  if (w.m() != 1) throw std::invalid_argument("common index divisor tests require q = p (m = 1)");
}

void require_modulus(const WeilPoly& w, const Integer& n) {
  if (n < 2) throw std::invalid_argument("modulus must be at least 2");
  if (gcd(n, from_u64(w.p())) != 1)
    throw NotCoprimeError("n = " + n.get_str() + " is not prime to p = " + std::to_string(w.p()));
}

}  // namespace

Integer necklace_sum(const Integer& m, std::uint64_t p) {
  if (m < 1) throw std::invalid_argument("necklace_sum: m must be positive");
  if (!fits_u64(m)) throw std::invalid_argument("necklace_sum: m too large to expand");
  const Integer P = from_u64(p);
  Integer s = 0;
  for (const auto& d : divisors(factorize(m))) {
    const int mu = mobius(m / d);
    if (mu != 0) s += mu * pow(P, to_u64(d));
  }
  return s;
}

Integer irred_count(unsigned long m, std::uint64_t p) {
  if (m == 0) throw std::invalid_argument("irred_count: m must be positive");
  static Memo<std::pair<unsigned long, std::uint64_t>> memo;
  return memo.get({m, p}, [&] {
    const Integer s = necklace_sum(Integer(m), p);
    ensure(divides(Integer(m), s), "necklace sum not divisible by m");
    return Integer(s / m);
  });
}

Integer gsp_order(unsigned g, const Integer& n) {
  if (g == 0) throw std::invalid_argument("gsp_order: g must be positive");
  if (n < 1) throw std::invalid_argument("gsp_order: n must be positive");
  static Memo<std::pair<unsigned, Integer>> memo;
  return memo.get({g, n}, [&] {
    Integer order = 1;
    const unsigned long dim = 2ul * g * g + g + 1;
    for (const auto& [l, e] : factorize(n).factors) {
      Integer local = (l - 1) * pow(l, static_cast<unsigned long>(g) * g);
      for (unsigned i = 1; i <= g; ++i) local *= pow(l, 2 * i) - 1;
      order *= local * pow(l, dim * (e - 1));
    }
    return order;
  });
}

bool cid_from_order(unsigned g, std::uint64_t p, const Integer& n, const Integer& ord) {
  if (ord < 1) throw std::invalid_argument("cid_from_order: order must be positive");
  const Integer G = gsp_order(g, n);
  ensure(divides(ord, G), "Frobenius order does not divide |GSp_2g(Z/nZ)|");
  // necklace_sum(ord, p) >= p^{ord-1} >= 2^{(ord-1) floor(log2 p)}.
  const Integer log2p = static_cast<unsigned long>(bit_length(from_u64(p)) - 1);
  if (ord >= 3 && (ord - 1) * log2p >= static_cast<unsigned long>(bit_length(G))) return false;
  const Integer s = necklace_sum(ord, p);
  ensure(divides(ord, s), "necklace sum not divisible by the order");
  const bool uncancelled = G > s;
  const bool cancelled = G / ord > s / ord;
  ensure(uncancelled == cancelled, "the two common-index-divisor comparisons disagree");
  return uncancelled;
}

bool is_common_index_divisor(const WeilPoly& w, const Integer& n) { return splitting_report(w, n).cid; }

SplittingReport splitting_report(const WeilPoly& w, const Integer& n) {
  require_prime_field(w);
  require_modulus(w, n);
  return splitting_report(w, frobenius_matrix(w), n);
}

SplittingReport splitting_report(const WeilPoly& w, const IntMatrix& sigma, const Integer& n) {
  require_prime_field(w);
  require_modulus(w, n);
  SplittingReport r;
  r.n = n;
  r.inertia_degree = frobenius_order_mod(w, sigma, n);
  const Integer G = gsp_order(w.g(), n);
  ensure(divides(r.inertia_degree, G), "Frobenius order does not divide |GSp_2g(Z/nZ)|");
  r.prime_count = G / r.inertia_degree;
  r.cid = cid_from_order(w.g(), w.p(), n, r.inertia_degree);
  if (r.inertia_degree == 1)
    ensure(divides(pow(n, 2 * w.g()), w.poly().eval(1).get_num()), "order 1 without n^{2g} | f(1)");
  r.hypothesis_note = kHypothesisNote;
  return r;
}

}  // namespace weilcid
