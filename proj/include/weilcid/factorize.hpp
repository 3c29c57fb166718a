// Licensed under the Apache License, Version 2.0 (see LICENSE or
// https://www.apache.org/licenses/LICENSE-2.0).

#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "weilcid/integer.hpp"

namespace weilcid {

/// Prime factorization, prime -> exponent.
struct Factorization {
  std::map<Integer, unsigned> factors;

  Integer value() const;
  bool empty() const { return factors.empty(); }
  /// Multiplies in another factorization.
  void merge(const Factorization& other);
  friend bool operator==(const Factorization&, const Factorization&) = default;
};

/// Primality test. Deterministic below 3.3e24 (Miller-Rabin on the first
/// thirteen prime bases); above that, Baillie-PSW is added on top.
bool is_prime(const Integer& n);

/// Complete factorization of n >= 1. Trial division to 10^4, then
/// Pollard-Brent rho seeded from n and seed so results are reproducible.
Factorization factorize(const Integer& n, std::uint64_t seed = 0);

/// All positive divisors, sorted ascending.
std::vector<Integer> divisors(const Factorization& f);

/// Moebius function of n >= 1.
int mobius(const Integer& n);

}  // namespace weilcid
