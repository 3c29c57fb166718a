// Licensed under the Apache License, Version 2.0 (see LICENSE or
// https://www.apache.org/licenses/LICENSE-2.0).

#include "weilcid/fp_poly.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace weilcid {

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

// Polynomials over F_l, low degree first, no trailing zeros.
class Field {
 public:
  explicit Field(u64 l) : l_(l) {}
  u64 modulus() const { return l_; }
  u64 add(u64 a, u64 b) const { return static_cast<u64>((static_cast<u128>(a) + b) % l_); }
  u64 sub(u64 a, u64 b) const { return a >= b ? a - b : static_cast<u64>(static_cast<u128>(a) + l_ - b); }
  u64 mul(u64 a, u64 b) const { return static_cast<u64>(static_cast<u128>(a) * b % l_); }
  u64 pow(u64 a, u64 e) const {
    u64 r = 1 % l_;
    while (e) {
      if (e & 1) r = mul(r, a);
      a = mul(a, a);
      e >>= 1;
    }
    return r;
  }
  u64 inv(u64 a) const { return pow(a, l_ - 2); }

 private:
  u64 l_;
};

using Poly = std::vector<u64>;

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

int deg(const Poly& a) { return static_cast<int>(a.size()) - 1; }

Poly sub(const Field& F, Poly a, const Poly& b) {
  if (b.size() > a.size()) a.resize(b.size(), 0);
  for (std::size_t i = 0; i < b.size(); ++i) a[i] = F.sub(a[i], b[i]);
  trim(a);
  return a;
}

Poly mul(const Field& F, const Poly& a, const Poly& b) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = F.add(r[i + j], F.mul(a[i], b[j]));
  trim(r);
  return r;
}

// Returns (quotient, remainder).
std::pair<Poly, Poly> divmod(const Field& F, Poly a, const Poly& b) {
  if (b.empty()) throw std::invalid_argument("division by zero polynomial over F_l");
  if (deg(a) < deg(b)) return {{}, a};
  const u64 inv_lb = F.inv(b.back());
  Poly q(a.size() - b.size() + 1, 0);
  for (int i = deg(a); i >= deg(b); --i) {
    const u64 c = F.mul(a[i], inv_lb);
    q[i - deg(b)] = c;
    if (c == 0) continue;
    for (int j = 0; j <= deg(b); ++j) a[i - deg(b) + j] = F.sub(a[i - deg(b) + j], F.mul(c, b[j]));
  }
  a.resize(b.size() - 1);
  trim(a);
  trim(q);
  return {q, a};
}

Poly rem(const Field& F, const Poly& a, const Poly& b) { return divmod(F, a, b).second; }

Poly monic(const Field& F, Poly a) {
  if (a.empty()) return a;
  const u64 inv = F.inv(a.back());
  for (auto& c : a) c = F.mul(c, inv);
  return a;
}

Poly gcd(const Field& F, Poly a, Poly b) {
  while (!b.empty()) {
    Poly r = rem(F, a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return monic(F, a);
}

Poly derivative(const Field& F, const Poly& a) {
  Poly d;
  for (std::size_t i = 1; i < a.size(); ++i) d.push_back(F.mul(a[i], i % F.modulus()));
  trim(d);
  return d;
}

Poly powmod(const Field& F, Poly base, u64 e, const Poly& m) {
  Poly r{1};
  r = rem(F, r, m);
  base = rem(F, base, m);
  while (e) {
    if (e & 1) r = rem(F, mul(F, r, base), m);
    base = rem(F, mul(F, base, base), m);
    e >>= 1;
  }
  return r;
}

// f = g(x^l): return g (valid when f' = 0).
Poly pth_root(const Field& F, const Poly& f) {
  const u64 l = F.modulus();
  Poly g;
  for (std::size_t i = 0; i < f.size(); i += l) g.push_back(f[i]);
  trim(g);
  return g;  // coefficients are their own l-th roots in F_l
}

// Squarefree factorization of a monic polynomial: pairs (factor, exponent).
void squarefree(const Field& F, const Poly& f, u64 scale, std::vector<std::pair<Poly, u64>>& out) {
  if (deg(f) <= 0) return;
  Poly d = derivative(F, f);
  if (d.empty()) {
    squarefree(F, pth_root(F, f), scale * F.modulus(), out);
    return;
  }
  Poly c = gcd(F, f, d);
  Poly w = divmod(F, f, c).first;
  u64 i = 1;
  while (deg(w) > 0) {
    Poly y = gcd(F, w, c);
    Poly z = divmod(F, w, y).first;
    if (deg(z) > 0) out.emplace_back(monic(F, z), i * scale);
    ++i;
    w = std::move(y);
    c = divmod(F, c, w).first;
  }
  if (deg(c) > 0) squarefree(F, pth_root(F, c), scale * F.modulus(), out);
}

// Distinct-degree factorization of a monic squarefree polynomial: appends
// one degree per irreducible factor.
void distinct_degree(const Field& F, Poly u, std::vector<unsigned>& degrees) {
  const Poly x{0, 1};
  Poly xp = x;
  unsigned d = 0;
  while (deg(u) > 0) {
    ++d;
    if (2 * static_cast<int>(d) > deg(u)) {
      degrees.push_back(static_cast<unsigned>(deg(u)));
      return;
    }
    xp = powmod(F, xp, F.modulus(), u);
    Poly g = gcd(F, u, sub(F, xp, x));
    if (deg(g) > 0) {
      for (int k = 0; k < deg(g) / static_cast<int>(d); ++k) degrees.push_back(d);
      u = divmod(F, u, g).first;
      xp = rem(F, xp, u);
    }
  }
}

}  // namespace

std::vector<FactorDegree> factor_degrees_mod(const IntPoly& f, std::uint64_t l) {
  if (l < 2 || l >> 63) throw std::invalid_argument("factor_degrees_mod: modulus out of range");
  if (!f.is_monic()) throw std::invalid_argument("factor_degrees_mod: polynomial must be monic");
  const Field F(l);
  const Integer L = from_u64(l);
  Poly fl(f.coeffs().size());
  for (std::size_t i = 0; i < fl.size(); ++i) {
    Integer r;
    mpz_fdiv_r(r.get_mpz_t(), f[i].get_mpz_t(), L.get_mpz_t());
    fl[i] = to_u64(r);
  }
  trim(fl);

  std::vector<std::pair<Poly, u64>> parts;
  squarefree(F, fl, 1, parts);
  std::vector<FactorDegree> out;
  for (const auto& [u, mult] : parts) {
    std::vector<unsigned> degrees;
    distinct_degree(F, u, degrees);
    for (unsigned d : degrees) out.push_back({d, static_cast<unsigned>(mult)});
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool irreducible_mod(const IntPoly& f, std::uint64_t l) {
  const auto parts = factor_degrees_mod(f, l);
  return parts.size() == 1 && parts[0].multiplicity == 1 &&
         static_cast<int>(parts[0].degree) == f.degree();
}

}  // namespace weilcid
