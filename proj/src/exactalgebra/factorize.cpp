// Licensed under the Apache License, Version 2.0 (see LICENSE or
// https://www.apache.org/licenses/LICENSE-2.0).

#include "weilcid/factorize.hpp"

#include <algorithm>
#include <array>
#include <random>
#include <stdexcept>

namespace weilcid {

namespace {

constexpr unsigned long kTrialBound = 10000;

const std::vector<unsigned long>& small_primes() {
  static const std::vector<unsigned long> primes = [] {
    std::vector<bool> sieve(kTrialBound + 1, true);
    std::vector<unsigned long> out;
    for (unsigned long i = 2; i <= kTrialBound; ++i) {
      if (!sieve[i]) continue;
      out.push_back(i);
      for (unsigned long j = i * i; j <= kTrialBound; j += i) sieve[j] = false;
    }
    return out;
  }();
  return primes;
}

bool miller_rabin(const Integer& n, unsigned long base) {
  Integer d = n - 1;
  unsigned s = 0;
  while (mpz_even_p(d.get_mpz_t())) {
    d >>= 1;
    ++s;
  }
  Integer x;
  const Integer a(base);
  mpz_powm(x.get_mpz_t(), a.get_mpz_t(), d.get_mpz_t(), n.get_mpz_t());
  if (x == 1 || x == n - 1) return true;
  for (unsigned r = 1; r < s; ++r) {
    x = x * x % n;
    if (x == n - 1) return true;
  }
  return false;
}

Integer pollard_brent(const Integer& n, std::mt19937_64& rng) {
  if (mpz_even_p(n.get_mpz_t())) return 2;
  std::uniform_int_distribution<unsigned long> dist(1, ~0UL);
  while (true) {
    Integer y = Integer(dist(rng)) % n;
    const Integer c = Integer(dist(rng)) % (n - 1) + 1;
    const unsigned long m = 128;
    Integer g = 1, r = 1, q = 1, x, ys;
    while (g == 1) {
      x = y;
      for (Integer i = 0; i < r; ++i) y = (y * y + c) % n;
      Integer k = 0;
      while (k < r && g == 1) {
        ys = y;
        for (unsigned long i = 0; i < m && Integer(i) < r - k; ++i) {
          y = (y * y + c) % n;
          q = q * abs(x - y) % n;
        }
        g = gcd(q, n);
        k += m;
      }
      r *= 2;
    }
    if (g == n) {
      do {
        ys = (ys * ys + c) % n;
        g = gcd(abs(x - ys), n);
      } while (g == 1);
    }
    if (g != n) return g;
  }
}

void split(const Integer& n, std::mt19937_64& rng, Factorization& out, unsigned mult) {
  if (n == 1) return;
  if (is_prime(n)) {
    out.factors[n] += mult;
    return;
  }
  // Pure powers defeat rho; peel them first.
  for (unsigned long k = bit_length(n); k >= 2 && mpz_perfect_power_p(n.get_mpz_t()); --k) {
    Integer root;
    if (mpz_root(root.get_mpz_t(), n.get_mpz_t(), k) != 0) {
      split(root, rng, out, mult * static_cast<unsigned>(k));
      return;
    }
  }
  Integer d = pollard_brent(n, rng);
  Integer rest = n / d;
  // Keep shared primes together so exponents add correctly.
  split(d, rng, out, mult);
  split(rest, rng, out, mult);
}

}  // namespace

Integer Factorization::value() const {
  Integer v = 1;
  for (const auto& [p, e] : factors) v *= pow(p, e);
  return v;
}

void Factorization::merge(const Factorization& other) {
  for (const auto& [p, e] : other.factors) factors[p] += e;
}

bool is_prime(const Integer& n) {
  if (n < 2) return false;
  static constexpr std::array<unsigned long, 13> bases{2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41};
  for (unsigned long b : bases) {
    if (n == b) return true;
    if (divides(Integer(b), n)) return false;
  }
  for (unsigned long b : bases)
    if (!miller_rabin(n, b)) return false;
  static const Integer kDeterministicBound("3317044064679887385961981");
  if (n < kDeterministicBound) return true;
  return mpz_probab_prime_p(n.get_mpz_t(), 30) != 0;
}

Factorization factorize(const Integer& n_in, std::uint64_t seed) {
  if (n_in < 1) throw std::invalid_argument("factorize: argument must be positive");
  Factorization out;
  Integer n = n_in;
  for (unsigned long p : small_primes()) {
    if (Integer(p) * p > n) break;
    if (mpz_divisible_ui_p(n.get_mpz_t(), p)) {
      unsigned e = 0;
      while (mpz_divisible_ui_p(n.get_mpz_t(), p)) {
        mpz_divexact_ui(n.get_mpz_t(), n.get_mpz_t(), p);
        ++e;
      }
      out.factors[Integer(p)] = e;
    }
  }
  if (n == 1) return out;
  std::seed_seq seq{static_cast<std::uint64_t>(mpz_get_ui(n.get_mpz_t())), seed,
                    static_cast<std::uint64_t>(bit_length(n))};
  std::mt19937_64 rng(seq);
  split(n, rng, out, 1);
  return out;
}

std::vector<Integer> divisors(const Factorization& f) {
  std::vector<Integer> out{1};
  for (const auto& [p, e] : f.factors) {
    const std::size_t base = out.size();
    Integer pk = 1;
    for (unsigned k = 1; k <= e; ++k) {
      pk *= p;
      for (std::size_t i = 0; i < base; ++i) out.push_back(out[i] * pk);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

int mobius(const Integer& n) {
  if (n < 1) throw std::invalid_argument("mobius: argument must be positive");
  const Factorization f = factorize(n);
  int sign = 1;
  for (const auto& [p, e] : f.factors) {
    if (e > 1) return 0;
    sign = -sign;
  }
  return sign;
}

}  // namespace weilcid
