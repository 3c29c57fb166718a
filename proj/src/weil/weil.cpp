// Licensed under the Apache License, Version 2.0 (see LICENSE or
// https://www.apache.org/licenses/LICENSE-2.0).

#include "weilcid/weil.hpp"

#include <algorithm>
#include <cctype>
#include <mutex>
#include <sstream>
#include <stdexcept>

#include "weilcid/factorize.hpp"
#include "weilcid/fp_poly.hpp"
#include "weilcid/newton.hpp"
#include "weilcid/sturm.hpp"

namespace weilcid {

namespace {

// C_k(y) with C_k(x + q/x) = x^k + q^k/x^k.
std::vector<IntPoly> chebyshev_like(const Integer& q, unsigned g) {
  std::vector<IntPoly> c{IntPoly({2}), IntPoly({0, 1})};
  const IntPoly y({0, 1});
  while (c.size() <= g) {
    const std::size_t k = c.size();
    c.push_back(y * c[k - 1] - c[k - 2] * q);
  }
  return c;
}

// h(y) = a_g + sum_{k=1}^{g} a_{g+k} C_k(y), with the a_{g+k} given as the
// free coefficients (free[j-1] = a_{2g-j}) and a_{2g} = 1. Entries of free
// beyond `known` are treated as zero.
IntPoly companion_from_free(const std::vector<IntPoly>& cheb, unsigned g, const std::vector<Integer>& free,
                            std::size_t known) {
  IntPoly h = cheb[g];
  for (std::size_t j = 1; j <= known; ++j) {
    const unsigned k = g - static_cast<unsigned>(j);  // free[j-1] = a_{g+k}
    if (free[j - 1] == 0) continue;
    if (k == 0)
      h += IntPoly(std::vector<Integer>{free[j - 1]});
    else
      h += cheb[k] * free[j - 1];
  }
  return h;
}

bool sqrt_le(const Integer& lhs_sq_coeff, const Integer& rhs) {
  // sqrt(lhs_sq_coeff) <= rhs, lhs_sq_coeff >= 0.
  return rhs >= 0 && lhs_sq_coeff <= rhs * rhs;
}

bool sqrt_lt(const Integer& lhs_sq_coeff, const Integer& rhs) {
  return rhs > 0 && lhs_sq_coeff < rhs * rhs;
}

// floor((u + w sqrt q) / c) for c > 0.
Integer floor_surd(const Integer& u, const Integer& w, const Integer& q, const Integer& c) {
  const Integer w2q = w * w * q;
  const Integer fs = w >= 0 ? isqrt(w2q) : Integer(-isqrt_ceil(w2q));
  Integer r;
  mpz_fdiv_q(r.get_mpz_t(), Integer(u + fs).get_mpz_t(), c.get_mpz_t());
  return r;
}

// d(sign * 2 sqrt q) = u + w sqrt q.
std::pair<Integer, Integer> eval_at_edge(const IntPoly& d, const Integer& q, int sign) {
  Integer u = 0, w = 0, scale = 1;  // scale = (2 sqrt q)^k without the sqrt q factor
  for (int k = 0; k <= d.degree(); ++k) {
    const Integer term = (sign < 0 && k % 2 ? -d[k] : d[k]) * scale;
    if (k % 2 == 0) {
      u += term;
      scale *= 2;
    } else {
      w += term;
      scale *= 2 * q;
    }
  }
  return {u, w};
}

const std::vector<unsigned long>& certificate_primes() {
  static const std::vector<unsigned long> primes{2,  3,  5,  7,  11, 13, 17, 19, 23, 29, 31, 37, 41,
                                                 43, 47, 53, 59, 61, 67, 71, 73, 79, 83, 89, 97};
  return primes;
}

// Every Weil q-polynomial of degree 2k, memoised per (q, k).
const std::vector<IntPoly>& weil_divisors(const Integer& q, unsigned k) {
  static std::mutex mu;
  static std::map<std::pair<Integer, unsigned>, std::vector<IntPoly>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto key = std::make_pair(q, k);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;
  std::vector<IntPoly> out;
  for_each_weil_free_coeffs(q, k, {}, [&](const std::vector<Integer>& free) {
    std::vector<Integer> c(2 * k + 1);
    c[2 * k] = 1;
    c[0] = pow(q, k);
    for (unsigned j = 1; j <= k; ++j) {
      c[2 * k - j] = free[j - 1];
      if (j < k) c[j] = pow(q, k - j) * free[j - 1];
    }
    out.emplace_back(std::move(c));
  });
  return cache.emplace(key, std::move(out)).first->second;
}

void emit_if_irreducible(WeilCandidate c, std::vector<WeilPoly>& out) {
  auto w = WeilPoly::from_candidate(std::move(c));
  if (!w) throw std::logic_error("enumerate_weil: fast path produced a non-Weil polynomial");
  if (is_irreducible(*w)) out.push_back(std::move(*w));
}

// Inclusive range of a coefficient, narrowed to the pinned value if any.
std::pair<Integer, Integer> clamp(const CoeffFilter& filter, unsigned index, Integer lo, Integer hi) {
  auto it = filter.fixed.find(index);
  if (it != filter.fixed.end()) {
    if (it->second < lo || it->second > hi) return {1, 0};
    return {it->second, it->second};
  }
  return {lo, hi};
}

std::vector<WeilPoly> enumerate_dim2(std::uint64_t p, unsigned m, const Integer& q, const CoeffFilter& filter) {
  std::vector<WeilPoly> out;
  const Integer a3_max = 2 * isqrt(4 * q);
  auto [a3_lo, a3_hi] = clamp(filter, 3, -a3_max, a3_max);
  for (Integer a3 = a3_lo; a3 <= a3_hi; ++a3) {
    const Integer lo = isqrt_ceil(4 * a3 * a3 * q) - 2 * q;
    Integer hi = a3 * a3 + 8 * q;
    mpz_fdiv_q_ui(hi.get_mpz_t(), hi.get_mpz_t(), 4);
    auto [a2_lo, a2_hi] = clamp(filter, 2, lo, hi);
    for (Integer a2 = a2_lo; a2 <= a2_hi; ++a2) {
      if (!is_weil_dim2(a3, a2, q)) continue;
      emit_if_irreducible(from_free_coeffs(p, m, 2, {a3, a2}), out);
    }
  }
  return out;
}

std::vector<WeilPoly> enumerate_dim3(std::uint64_t p, unsigned m, const Integer& q, const CoeffFilter& filter) {
  std::vector<WeilPoly> out;
  const Integer a5_max = isqrt_ceil(36 * q) - 1;
  auto [a5_lo, a5_hi] = clamp(filter, 5, -a5_max, a5_max);
  for (Integer a5 = a5_lo; a5 <= a5_hi; ++a5) {
    const Integer lo4 = isqrt(16 * q * a5 * a5) - 9 * q + 1;
    Integer hi4 = a5 * a5 + 9 * q;
    mpz_fdiv_q_ui(hi4.get_mpz_t(), hi4.get_mpz_t(), 3);
    auto [a4_lo, a4_hi] = clamp(filter, 4, lo4, hi4);
    for (Integer a4 = a4_lo; a4 <= a4_hi; ++a4) {
      if (a4 + q <= 0) continue;
      const Integer radius = isqrt(4 * q * (a4 + q) * (a4 + q));
      auto [a3_lo, a3_hi] = clamp(filter, 3, -2 * q * a5 - radius, -2 * q * a5 + radius);
      for (Integer a3 = a3_lo; a3 <= a3_hi; ++a3) {
        if (!is_weil_dim3(a5, a4, a3, q)) continue;
        emit_if_irreducible(from_free_coeffs(p, m, 3, {a5, a4, a3}), out);
      }
    }
  }
  return out;
}

}  // namespace

std::string WeilCandidate::label() const {
  std::ostringstream os;
  os << "q=" << q.get_str() << " g=" << g << " (";
  for (std::size_t i = 0; i < free_coeffs.size(); ++i) os << (i ? "," : "") << free_coeffs[i].get_str();
  os << ")";
  return os.str();
}

std::optional<WeilPoly> WeilPoly::from_candidate(WeilCandidate c) {
  if (!is_weil(c)) return std::nullopt;
  return WeilPoly(std::move(c));
}

WeilCandidate from_free_coeffs(std::uint64_t p, unsigned m, unsigned g, std::vector<Integer> free) {
  if (!is_prime(from_u64(p))) throw std::invalid_argument("from_free_coeffs: p must be prime");
  if (m == 0) throw std::invalid_argument("from_free_coeffs: m must be positive");
  if (g == 0) throw std::invalid_argument("from_free_coeffs: g must be positive");
  if (free.size() != g)
    throw std::invalid_argument("from_free_coeffs: expected " + std::to_string(g) + " free coefficients, got " +
                                std::to_string(free.size()));
  WeilCandidate c;
  c.p = p;
  c.m = m;
  c.q = pow(from_u64(p), m);
  c.g = g;
  std::vector<Integer> coeffs(2 * g + 1);
  coeffs[2 * g] = 1;
  coeffs[0] = pow(c.q, g);
  for (unsigned j = 1; j <= g; ++j) {
    coeffs[2 * g - j] = free[j - 1];
    if (j < g) coeffs[j] = pow(c.q, g - j) * free[j - 1];  // a_j = q^{g-j} a_{2g-j}
  }
  c.free_coeffs = std::move(free);
  c.poly = IntPoly(std::move(coeffs));
  return c;
}

WeilCandidate from_free_coeffs(std::uint64_t p, unsigned g, std::initializer_list<long> free) {
  std::vector<Integer> v;
  for (long x : free) v.emplace_back(x);
  return from_free_coeffs(p, 1, g, std::move(v));
}

IntPoly real_companion(const WeilCandidate& c) {
  const auto cheb = chebyshev_like(c.q, c.g);
  return companion_from_free(cheb, c.g, c.free_coeffs, c.g);
}

bool is_weil(const WeilCandidate& c) { return all_roots_real_in(real_companion(c), c.q); }

bool is_weil_dim2(const Integer& a3, const Integer& a2, const Integer& q) {
  if (abs(a3) > 2 * isqrt(4 * q)) return false;
  // 2|a3| sqrt q <= a2 + 2q
  if (!sqrt_le(4 * a3 * a3 * q, a2 + 2 * q)) return false;
  // a2 <= a3^2/4 + 2q
  return 4 * a2 <= a3 * a3 + 8 * q;
}

bool is_weil_dim3(const Integer& a5, const Integer& a4, const Integer& a3, const Integer& q) {
  // (1) |a5| < 6 sqrt q
  if (!(a5 * a5 < 36 * q)) return false;
  // (2) 4 sqrt q |a5| - 9q < a4 <= a5^2/3 + 3q
  if (!sqrt_lt(16 * q * a5 * a5, a4 + 9 * q)) return false;
  if (!(3 * a4 <= a5 * a5 + 9 * q)) return false;
  // (3) |27 a3 - (-2 a5^3 + 9 a5 a4 + 27 q a5)| <= 2 D^{3/2}, D = a5^2 - 3 a4 + 9q
  const Integer d = a5 * a5 - 3 * a4 + 9 * q;
  if (d < 0) return false;
  const Integer x = 27 * a3 - (-2 * a5 * a5 * a5 + 9 * a5 * a4 + 27 * q * a5);
  if (!(x * x <= 4 * d * d * d)) return false;
  // (4) |a3 + 2 q a5| < 2 sqrt q (a4 + q)
  const Integer y = a3 + 2 * q * a5;
  return a4 + q > 0 && y * y < 4 * q * (a4 + q) * (a4 + q);
}

bool is_irreducible(const WeilPoly& w) {
  if (w.m() % 2 == 0) throw std::invalid_argument("is_irreducible: q must not be a perfect square");
  const IntPoly& f = w.poly();
  for (unsigned long l : certificate_primes())
    if (irreducible_mod(f, l)) return true;
  // Rational factors are x^2 - q or q-symmetric Weil polynomials of even
  // degree; one of them has degree at most g.
  const IntPoly x2_minus_q = IntPoly({0, 0, 1}) - IntPoly(std::vector<Integer>{w.q()});
  if (divide_exact(f, x2_minus_q)) return false;
  for (unsigned k = 1; 2 * k <= w.g(); ++k)
    for (const auto& u : weil_divisors(w.q(), k))
      if (divide_exact(f, u)) return false;
  return true;
}

unsigned p_rank(const WeilPoly& w) { return newton_polygon(w.poly(), from_u64(w.p())).slope_zero_length(); }

CoeffFilter CoeffFilter::parse(const std::string& spec) {
  CoeffFilter f;
  std::string item;
  std::istringstream is(spec);
  while (std::getline(is, item, ',')) {
    std::string s;
    for (char ch : item)
      if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
    if (s.empty()) continue;
    const auto eq = s.find('=');
    if (s.size() < 4 || s[0] != 'a' || eq == std::string::npos || eq < 2)
      throw std::invalid_argument("bad coefficient pin '" + item + "', expected e.g. a5=0");
    try {
      std::size_t used = 0;
      const unsigned long idx = std::stoul(s.substr(1, eq - 1), &used);
      if (used != eq - 1) throw std::invalid_argument("index");
      Integer value;
      if (value.set_str(s.substr(eq + 1), 10) != 0) throw std::invalid_argument("value");
      f.fixed[static_cast<unsigned>(idx)] = value;
    } catch (const std::exception&) {
      throw std::invalid_argument("bad coefficient pin '" + item + "', expected e.g. a5=0");
    }
  }
  return f;
}

void CoeffFilter::validate(unsigned g) const {
  for (const auto& [idx, value] : fixed)
    if (idx < g || idx > 2 * g - 1)
      throw std::invalid_argument("a" + std::to_string(idx) + " is not a free coefficient in dimension " +
                                  std::to_string(g) + " (free: a" + std::to_string(2 * g - 1) + "..a" +
                                  std::to_string(g) + ")");
}

bool CoeffFilter::admits(const WeilCandidate& c) const {
  for (const auto& [idx, value] : fixed)
    if (c.coeff(idx) != value) return false;
  return true;
}

std::string CoeffFilter::to_string() const {
  std::string s;
  for (auto it = fixed.rbegin(); it != fixed.rend(); ++it) {
    if (!s.empty()) s += ",";
    s += "a" + std::to_string(it->first) + "=" + it->second.get_str();
  }
  return s;
}

void for_each_weil_free_coeffs(const Integer& q, unsigned g, const CoeffFilter& filter,
                               const std::function<void(const std::vector<Integer>&)>& visit) {
  if (g == 0) throw std::invalid_argument("for_each_weil_free_coeffs: g must be positive");
  filter.validate(g);
  const auto cheb = chebyshev_like(q, g);
  std::vector<Integer> free(g, 0);

  // Level j fixes a_{2g-j}; the (g-j)-th derivative of h then has all its
  // coefficients determined and must be real-rooted in [-2 sqrt q, 2 sqrt q].
  std::function<void(unsigned)> descend = [&](unsigned j) {
    if (j > g) {
      visit(free);
      return;
    }
    free[j - 1] = 0;
    const IntPoly base = companion_from_free(cheb, g, free, j);
    const Integer shift = base[g - j];  // b_j = a_{2g-j} + shift
    Integer binom = 1;
    for (unsigned i = 1; i <= j; ++i) binom = binom * (g - i + 1) / i;
    const Integer bound = isqrt(binom * binom * pow(4 * q, j));
    Integer box_lo = -bound - shift, box_hi = bound - shift;

    // d = d0 + c a with c = (g-j)!; d(R) >= 0 and (-1)^j d(-R) >= 0, R = 2 sqrt q.
    IntPoly d0 = base;
    Integer c = 1;
    for (unsigned k = 0; k < g - j; ++k) {
      d0 = d0.derivative();
      c *= k + 1;
    }
    {
      const auto [u, w] = eval_at_edge(d0, q, +1);
      box_lo = std::max(box_lo, Integer(-floor_surd(u, w, q, c)));
    }
    {
      const auto [u, w] = eval_at_edge(d0, q, -1);
      if (j % 2 == 0)
        box_lo = std::max(box_lo, Integer(-floor_surd(u, w, q, c)));
      else
        box_hi = std::min(box_hi, floor_surd(-u, -w, q, c));
    }
    auto [lo, hi] = clamp(filter, 2 * g - j, box_lo, box_hi);

    bool seen_valid = false;
    for (Integer a = lo; a <= hi; ++a) {
      free[j - 1] = a;
      const IntPoly d = d0 + IntPoly(std::vector<Integer>{c * a});
      if (all_roots_real_in(d, q)) {
        seen_valid = true;
        descend(j + 1);
      } else if (seen_valid) {
        break;  // the admissible values form an interval
      }
    }
    free[j - 1] = 0;
  };
  descend(1);
}

std::vector<WeilPoly> enumerate_weil(std::uint64_t p, unsigned g, unsigned m, const CoeffFilter& filter) {
  if (g == 0) throw std::invalid_argument("enumerate_weil: g must be positive");
  filter.validate(g);
  const Integer q = pow(from_u64(p), m);
  if (!is_prime(from_u64(p))) throw std::invalid_argument("enumerate_weil: p must be prime");
  if (g == 2) return enumerate_dim2(p, m, q, filter);
  if (g == 3) return enumerate_dim3(p, m, q, filter);
  std::vector<WeilPoly> out;
  for_each_weil_free_coeffs(q, g, filter, [&](const std::vector<Integer>& free) {
    emit_if_irreducible(from_free_coeffs(p, m, g, free), out);
  });
  return out;
}

}  // namespace weilcid
