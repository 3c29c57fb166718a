// Licensed under the Apache License, Version 2.0 (see LICENSE or
// https://www.apache.org/licenses/LICENSE-2.0).

#include "weilcid/frobenius.hpp"

#include <stdexcept>

#include "weilcid/discriminant.hpp"
#include "weilcid/error.hpp"
#include "weilcid/factorize.hpp"

namespace weilcid {

namespace {

void require_dimension(const WeilPoly& w) {
  if (w.g() < 2) throw std::invalid_argument("the Frobenius matrix needs g >= 2");
}

// Elements of Q[x]/f as coefficient vectors of length 2g.
using Elem = std::vector<Rational>;

Elem mul_mod(const Elem& a, const Elem& b, const IntPoly& f) {
  const std::size_t n = static_cast<std::size_t>(f.degree());
  std::vector<Rational> prod(2 * n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < n; ++j) prod[i + j] += a[i] * b[j];
  }
  for (std::size_t k = 2 * n - 1; k >= n; --k) {
    if (prod[k] == 0) continue;
    const Rational c = prod[k];
    for (std::size_t i = 0; i <= n; ++i) prod[k - n + i] -= c * Rational(f[static_cast<unsigned>(i)]);
  }
  return Elem(prod.begin(), prod.begin() + static_cast<std::ptrdiff_t>(n));
}

// Tr(x^k), k = 0..2n-2, by Newton's identities for monic f.
std::vector<Integer> power_sums(const IntPoly& f) {
  const int n = f.degree();
  std::vector<Integer> s(2 * n - 1);
  s[0] = n;
  for (int k = 1; k < 2 * n - 1; ++k) {
    Integer acc = 0;
    for (int i = 1; i <= std::min(k, n); ++i) {
      const Integer& e = f[n - i];  // coefficient of x^{n-i}
      if (i < k)
        acc -= e * s[k - i];
      else
        acc -= e * k;  // i == k <= n
    }
    s[k] = acc;
  }
  return s;
}

// Basis elements (1, pi, ..., pi^g, v, ..., v^{g-1}) in Q[pi].
std::vector<Elem> basis_elements(const WeilPoly& w) {
  const IntPoly& f = w.poly();
  const unsigned g = w.g();
  const std::size_t n = 2 * g;
  std::vector<Elem> out;
  for (unsigned i = 0; i <= g; ++i) {
    Elem e(n, 0);
    e[i] = 1;
    out.push_back(e);
  }
  // v = q/pi = -q (pi^{2g-1} + a_{2g-1} pi^{2g-2} + ... + a_1) / a_0.
  Elem v(n, 0);
  const Rational scale = Rational(-w.q()) / Rational(f[0]);
  for (std::size_t i = 0; i < n; ++i) v[i] = scale * Rational(f[static_cast<unsigned>(i + 1)]);
  Elem vk = v;
  for (unsigned k = 1; k < g; ++k) {
    out.push_back(vk);
    vk = mul_mod(vk, v, f);
  }
  return out;
}

Rational det_rational(std::vector<std::vector<Rational>> m) {
  const std::size_t n = m.size();
  Rational d = 1;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    while (p < n && m[p][k] == 0) ++p;
    if (p == n) return 0;
    if (p != k) {
      std::swap(m[p], m[k]);
      d = -d;
    }
    d *= m[k][k];
    for (std::size_t i = k + 1; i < n; ++i) {
      if (m[i][k] == 0) continue;
      const Rational r = m[i][k] / m[k][k];
      for (std::size_t j = k; j < n; ++j) m[i][j] -= r * m[k][j];
    }
  }
  return d;
}

}  // namespace

std::vector<std::string> basis(unsigned g) {
  if (g < 2) throw std::invalid_argument("basis: g must be at least 2");
  std::vector<std::string> out{"1", "pi"};
  for (unsigned i = 2; i <= g; ++i) out.push_back("pi^" + std::to_string(i));
  out.push_back("v");
  for (unsigned i = 2; i < g; ++i) out.push_back("v^" + std::to_string(i));
  return out;
}

IntMatrix frobenius_matrix(const WeilPoly& w) {
  require_dimension(w);
  const unsigned g = w.g();
  const Integer& q = w.q();
  IntMatrix s(2 * g);
  const auto a = [&](unsigned i) -> const Integer& { return w.coeff(i); };
  // Indices: pi^i -> i (0..g), v^i -> g + i (1..g-1).
  for (unsigned j = 0; j < g; ++j) s(j + 1, j) = 1;
  // pi * pi^g from f(pi) / pi^{g-1} = 0.
  s(0, g) = -q * a(g + 1);
  for (unsigned k = 1; k <= g; ++k) s(k, g) = -a(g + k - 1);
  for (unsigned i = 2; i < g; ++i) s(g + i - 1, g) = -q * a(g + i);
  s(2 * g - 1, g) = -q;
  s(0, g + 1) = q;
  for (unsigned i = 2; i < g; ++i) s(g + i - 1, g + i) = q;
  return s;
}

IntMatrix verschiebung_matrix(const WeilPoly& w) {
  require_dimension(w);
  const unsigned g = w.g();
  const Integer& q = w.q();
  IntMatrix v(2 * g);
  const auto a = [&](unsigned i) -> const Integer& { return w.coeff(i); };
  v(g + 1, 0) = 1;
  for (unsigned i = 1; i <= g; ++i) v(i - 1, i) = q;
  for (unsigned i = 1; i + 1 < g; ++i) v(g + i + 1, g + i) = 1;
  // v^g = -(pi^g + a_{2g-1} pi^{g-1} + ... + a_{g+1} pi + a_g + a_{g+1} v + ... + a_{2g-1} v^{g-1}).
  const unsigned last = 2 * g - 1;
  for (unsigned k = 0; k <= g; ++k) v(k, last) = -a(g + k);
  for (unsigned k = 1; k < g; ++k) v(g + k, last) = -a(g + k);
  return v;
}

Integer order_discriminant(const WeilPoly& w) {
  require_dimension(w);
  const IntPoly& f = w.poly();
  const unsigned g = w.g();
  const auto s = power_sums(f);
  const auto b = basis_elements(w);
  const std::size_t n = b.size();
  const auto trace = [&](const Elem& e) {
    Rational t = 0;
    for (std::size_t i = 0; i < e.size(); ++i) t += e[i] * Rational(s[i]);
    return t;
  };
  std::vector<std::vector<Rational>> gram(n, std::vector<Rational>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) gram[i][j] = gram[j][i] = trace(mul_mod(b[i], b[j], f));
  const Rational d = det_rational(std::move(gram));
  ensure(d.get_den() == 1, "trace-form discriminant is not an integer");

  const Integer index_sq = pow(w.q(), static_cast<unsigned long>(g) * (g - 1));
  const Integer df = discriminant(f);
  ensure(divides(index_sq, df), "disc(f) is not divisible by the squared index");
  ensure(d.get_num() == df / index_sq, "trace-form and resultant discriminants disagree");
  return d.get_num();
}

std::string to_string(Applicability a) { return a == Applicability::certain ? "certain" : "unknown"; }

Applicability guaranteed_applicable(const WeilPoly& w, std::uint64_t l) {
  if (!is_prime(from_u64(l))) throw std::invalid_argument("guaranteed_applicable: l must be prime");
  if (l == w.p()) throw std::invalid_argument("guaranteed_applicable: l must differ from p");
  return divides(from_u64(l), order_discriminant(w)) ? Applicability::unknown : Applicability::certain;
}

Integer frobenius_order_mod(const WeilPoly& w, const IntMatrix& sigma, const Integer& n) {
  if (gcd(n, w.q()) != 1)
    throw NotCoprimeError("n = " + n.get_str() + " is not prime to q = " + w.q().get_str());
  return matrix_order_mod(reduce_mod(sigma, n), w.poly());
}

}  // namespace weilcid
