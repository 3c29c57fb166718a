// Licensed under the Apache License, Version 2.0 (see LICENSE or
// https://www.apache.org/licenses/LICENSE-2.0).

#include "weilcid/matrix.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <set>
#include <sstream>
#include <stdexcept>

#include "weilcid/error.hpp"
#include "weilcid/fp_poly.hpp"

namespace weilcid {

namespace {

using u128 = unsigned __int128;

// Element of F_l; the modulus travels with the value.
struct Fl {
  std::uint64_t v = 0;
  std::uint64_t l = 2;

  friend Fl operator+(Fl a, Fl b) { return {static_cast<std::uint64_t>((u128(a.v) + b.v) % a.l), a.l}; }
  friend Fl operator-(Fl a, Fl b) { return {static_cast<std::uint64_t>((u128(a.v) + a.l - b.v) % a.l), a.l}; }
  friend Fl operator*(Fl a, Fl b) { return {static_cast<std::uint64_t>(u128(a.v) * b.v % a.l), a.l}; }
  friend Fl operator/(Fl a, Fl b) { return a * b.inverse(); }
  bool is_zero() const { return v == 0; }
  Fl inverse() const {
    // l prime: v^(l-2).
    Fl r{1 % l, l}, base = *this;
    for (std::uint64_t e = l - 2; e; e >>= 1) {
      if (e & 1) r = r * base;
      base = base * base;
    }
    return r;
  }
};

bool is_zero(const Rational& x) { return x == 0; }
bool is_zero(const Fl& x) { return x.is_zero(); }

// det(xI - H) for the n x n matrix a (row-major), via reduction to upper
// Hessenberg form. Returns coefficients low-first; `one` and `zero` carry
// the field context.
template <class F>
std::vector<F> hessenberg_charpoly(std::vector<F> a, std::size_t n, F zero, F one) {
  auto at = [&](std::size_t r, std::size_t c) -> F& { return a[r * n + c]; };
  for (std::size_t m = 1; m + 1 < n; ++m) {
    std::size_t i = m;
    while (i < n && is_zero(at(i, m - 1))) ++i;
    if (i == n) continue;
    if (i != m) {
      for (std::size_t c = 0; c < n; ++c) std::swap(at(i, c), at(m, c));
      for (std::size_t r = 0; r < n; ++r) std::swap(at(r, i), at(r, m));
    }
    const F pivot = at(m, m - 1);
    for (std::size_t j = m + 1; j < n; ++j) {
      if (is_zero(at(j, m - 1))) continue;
      const F u = at(j, m - 1) / pivot;
      for (std::size_t c = 0; c < n; ++c) at(j, c) = at(j, c) - u * at(m, c);
      for (std::size_t r = 0; r < n; ++r) at(r, m) = at(r, m) + u * at(r, j);
    }
  }
  std::vector<std::vector<F>> p(n + 1);
  p[0] = {one};
  for (std::size_t m = 1; m <= n; ++m) {
    // p_m = (x - h_{mm}) p_{m-1} - sum_i h_{im} (prod_{j=i+1}^{m} h_{j,j-1}) p_{i-1}
    std::vector<F> cur(m + 1, zero);
    for (std::size_t k = 0; k < m; ++k) {
      cur[k + 1] = cur[k + 1] + p[m - 1][k];
      cur[k] = cur[k] - at(m - 1, m - 1) * p[m - 1][k];
    }
    F t = one;
    for (std::size_t i = m - 1; i >= 1; --i) {
      t = t * at(i, i - 1);
      const F c = at(i - 1, m - 1) * t;
      for (std::size_t k = 0; k < p[i - 1].size(); ++k) cur[k] = cur[k] - c * p[i - 1][k];
    }
    p[m] = std::move(cur);
  }
  return p[n];
}

std::uint64_t checked_modulus(const Integer& n) {
  if (n < 2) throw std::invalid_argument("modulus must be at least 2");
  if (bit_length(n) > 63) throw std::invalid_argument("modulus must be below 2^63");
  return to_u64(n);
}

IntPoly reduce_poly(const IntPoly& f, std::uint64_t l) {
  std::vector<Integer> c(f.coeffs());
  const Integer L = from_u64(l);
  for (auto& x : c) x = ((x % L) + L) % L;
  return IntPoly(std::move(c));
}

Factorization factor_cyclotomic_value(std::uint64_t l, unsigned k) {
  const Integer L = from_u64(l);
  Integer num = 1, den = 1;
  for (unsigned d = 1; d <= k; ++d) {
    if (k % d) continue;
    const int mu = mobius(Integer(k / d));
    if (mu == 1) num *= pow(L, d) - 1;
    if (mu == -1) den *= pow(L, d) - 1;
  }
  ensure(divides(den, num), "cyclotomic value is not an integer");
  return factorize(num / den);
}

struct OrderContext {
  std::uint64_t l;
  unsigned e;
  IntPoly charpoly_l;  // reduced mod l
};

Integer order_mod_prime_power(const ModMatrix& m, const OrderContext& ctx, std::set<Integer>& primes) {
  const std::uint64_t l = ctx.l;
  if (ctx.charpoly_l[0] == 0)
    throw NotCoprimeError("matrix is not invertible mod " + std::to_string(l) +
                          " (the modulus must be prime to the determinant)");
  const auto degrees = factor_degrees_mod(ctx.charpoly_l, l);
  unsigned s_max = 1;
  for (const auto& fd : degrees) s_max = std::max(s_max, fd.multiplicity);

  // Multiple of the order: l^k (l^k >= s_max) times lcm_d (l^d - 1).
  Factorization bound;
  unsigned k = 0;
  for (Integer lk = 1; lk < s_max; lk *= from_u64(l)) ++k;
  if (k) bound.factors[from_u64(l)] = k;
  std::set<unsigned> seen;
  for (const auto& fd : degrees) {
    if (!seen.insert(fd.degree).second) continue;
    for (const auto& [r, ex] : factor_l_pow_minus_one(l, fd.degree).factors) {
      unsigned& cur = bound.factors[r];
      cur = std::max(cur, ex);
    }
  }

  const ModMatrix ml = m.reduce(l);
  Integer t = bound.value();
  ensure(ml.pow(t).is_identity(), "order bound is not a multiple of the order");
  for (const auto& [r, ex] : bound.factors) {
    for (unsigned i = 0; i < ex && ml.pow(t / r).is_identity(); ++i) t /= r;
    primes.insert(r);
  }

  if (ctx.e == 1) return t;
  const std::uint64_t le = to_u64(pow(from_u64(l), ctx.e));
  const ModMatrix me = m.reduce(le);
  for (unsigned j = 0; j < ctx.e; ++j) {
    const Integer cand = t * pow(from_u64(l), j);
    if (me.pow(cand).is_identity()) {
      if (j) primes.insert(from_u64(l));
      return cand;
    }
  }
  throw InvariantError("order lift exceeded l^(e-1)");
}

Integer order_impl(const ModMatrix& m, const IntPoly* charpoly) {
  const Factorization nf = factorize(from_u64(m.modulus()));
  Integer order = 1;
  std::set<Integer> primes;
  for (const auto& [L, e] : nf.factors) {
    const std::uint64_t l = to_u64(L);
    OrderContext ctx{l, e, charpoly ? reduce_poly(*charpoly, l) : charpoly_mod(m.reduce(l))};
    if (charpoly) ensure(ctx.charpoly_l.degree() == static_cast<int>(m.size()), "charpoly degree mismatch");
    order = lcm(order, order_mod_prime_power(m, ctx, primes));
  }
  ensure(m.pow(order).is_identity(), "returned order does not annihilate");
  for (const auto& r : primes)
    if (divides(r, order)) ensure(!m.pow(order / r).is_identity(), "returned order is not minimal");
  return order;
}

}  // namespace

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long>> rows) : n_(rows.size()), e_(n_ * n_) {
  std::size_t r = 0;
  for (const auto& row : rows) {
    if (row.size() != n_) throw std::invalid_argument("IntMatrix: rows must form a square matrix");
    std::size_t c = 0;
    for (long x : row) (*this)(r, c++) = x;
    ++r;
  }
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::operator*(const IntMatrix& o) const {
  if (n_ != o.n_) throw std::invalid_argument("IntMatrix: size mismatch");
  IntMatrix r(n_);
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t k = 0; k < n_; ++k) {
      if ((*this)(i, k) == 0) continue;
      for (std::size_t j = 0; j < n_; ++j) r(i, j) += (*this)(i, k) * o(k, j);
    }
  return r;
}

IntMatrix IntMatrix::operator*(const Integer& s) const {
  IntMatrix r(*this);
  for (auto& x : r.e_) x *= s;
  return r;
}

Integer IntMatrix::trace() const {
  Integer t = 0;
  for (std::size_t i = 0; i < n_; ++i) t += (*this)(i, i);
  return t;
}

Integer IntMatrix::det() const {
  if (n_ == 0) return 1;
  std::vector<Integer> a(e_);
  auto at = [&](std::size_t r, std::size_t c) -> Integer& { return a[r * n_ + c]; };
  Integer prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n_; ++k) {
    if (at(k, k) == 0) {
      std::size_t i = k + 1;
      while (i < n_ && at(i, k) == 0) ++i;
      if (i == n_) return 0;
      for (std::size_t c = 0; c < n_; ++c) std::swap(at(i, c), at(k, c));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n_; ++i)
      for (std::size_t j = k + 1; j < n_; ++j) {
        at(i, j) = at(i, j) * at(k, k) - at(i, k) * at(k, j);
        mpz_divexact(at(i, j).get_mpz_t(), at(i, j).get_mpz_t(), prev.get_mpz_t());
      }
    prev = at(k, k);
  }
  return sign * at(n_ - 1, n_ - 1);
}

IntPoly IntMatrix::charpoly() const {
  std::vector<Rational> a(e_.begin(), e_.end());
  const auto c = hessenberg_charpoly<Rational>(std::move(a), n_, Rational(0), Rational(1));
  std::vector<Integer> out;
  for (const auto& x : c) {
    ensure(x.get_den() == 1, "characteristic polynomial of an integer matrix is not integral");
    out.push_back(x.get_num());
  }
  return IntPoly(std::move(out));
}

std::string IntMatrix::to_string() const {
  std::ostringstream os;
  os << "[";
  for (std::size_t r = 0; r < n_; ++r) {
    os << (r ? ",[" : "[");
    for (std::size_t c = 0; c < n_; ++c) os << (c ? "," : "") << (*this)(r, c).get_str();
    os << "]";
  }
  os << "]";
  return os.str();
}

ModMatrix::ModMatrix(std::size_t size, std::uint64_t modulus) : n_(size), mod_(modulus), e_(size * size, 0) {
  if (modulus < 2 || modulus >> 63) throw std::invalid_argument("ModMatrix: modulus must be in [2, 2^63)");
}

ModMatrix ModMatrix::identity(std::size_t size, std::uint64_t modulus) {
  ModMatrix m(size, modulus);
  for (std::size_t i = 0; i < size; ++i) m.e_[i * size + i] = 1;
  return m;
}

ModMatrix ModMatrix::operator*(const ModMatrix& o) const {
  if (n_ != o.n_ || mod_ != o.mod_) throw std::invalid_argument("ModMatrix: shape or modulus mismatch");
  ModMatrix r(n_, mod_);
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j) {
      u128 acc = 0;
      for (std::size_t k = 0; k < n_; ++k) acc = (acc + u128(e_[i * n_ + k]) * o.e_[k * n_ + j]) % mod_;
      r.e_[i * n_ + j] = static_cast<std::uint64_t>(acc);
    }
  return r;
}

ModMatrix ModMatrix::pow(const Integer& e) const {
  if (e < 0) throw std::invalid_argument("ModMatrix::pow: negative exponent");
  ModMatrix r = identity(n_, mod_);
  for (std::size_t i = bit_length(e); i-- > 0;) {
    r = r * r;
    if (mpz_tstbit(e.get_mpz_t(), i)) r = r * *this;
  }
  return r;
}

bool ModMatrix::is_identity() const {
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j)
      if (e_[i * n_ + j] != (i == j ? 1u : 0u)) return false;
  return true;
}

ModMatrix ModMatrix::reduce(std::uint64_t d) const {
  if (d < 2 || mod_ % d) throw std::invalid_argument("ModMatrix::reduce: not a divisor of the modulus");
  ModMatrix r(n_, d);
  for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] = e_[i] % d;
  return r;
}

std::string ModMatrix::to_string() const {
  std::ostringstream os;
  os << "[";
  for (std::size_t r = 0; r < n_; ++r) {
    os << (r ? ",[" : "[");
    for (std::size_t c = 0; c < n_; ++c) os << (c ? "," : "") << e_[r * n_ + c];
    os << "]";
  }
  os << "] mod " << mod_;
  return os.str();
}

ModMatrix reduce_mod(const IntMatrix& m, const Integer& n) {
  const std::uint64_t mod = checked_modulus(n);
  ModMatrix r(m.size(), mod);
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < m.size(); ++j) {
      Integer x = m(i, j) % n;
      if (x < 0) x += n;
      r.set(i, j, to_u64(x));
    }
  return r;
}

IntPoly charpoly_mod(const ModMatrix& m) {
  const std::uint64_t l = m.modulus();
  if (!is_prime(from_u64(l))) throw std::invalid_argument("charpoly_mod: modulus must be prime");
  const std::size_t n = m.size();
  std::vector<Fl> a(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a[i * n + j] = Fl{m(i, j), l};
  const auto c = hessenberg_charpoly<Fl>(std::move(a), n, Fl{0, l}, Fl{1, l});
  std::vector<Integer> out;
  for (const auto& x : c) out.push_back(from_u64(x.v));
  return IntPoly(std::move(out));
}

Integer matrix_order_mod(const ModMatrix& m) { return order_impl(m, nullptr); }

Integer matrix_order_mod(const ModMatrix& m, const IntPoly& charpoly) { return order_impl(m, &charpoly); }

const Factorization& factor_l_pow_minus_one(std::uint64_t l, unsigned d) {
  if (d == 0) throw std::invalid_argument("factor_l_pow_minus_one: d must be positive");
  static std::mutex mu;
  static std::map<std::pair<std::uint64_t, unsigned>, Factorization> cyclo, full;
  std::lock_guard<std::mutex> lock(mu);
  auto it = full.find({l, d});
  if (it != full.end()) return it->second;
  Factorization f;
  for (unsigned k = 1; k <= d; ++k) {
    if (d % k) continue;
    auto c = cyclo.find({l, k});
    if (c == cyclo.end()) c = cyclo.emplace(std::make_pair(l, k), factor_cyclotomic_value(l, k)).first;
    f.merge(c->second);
  }
  ensure(f.value() == pow(from_u64(l), d) - 1, "cyclotomic factorization does not multiply back");
  return full.emplace(std::make_pair(l, d), std::move(f)).first->second;
}

}  // namespace weilcid
