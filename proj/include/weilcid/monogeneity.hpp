// Licensed under the Apache License, Version 2.0 (see LICENSE or
// https://www.apache.org/licenses/LICENSE-2.0).

#pragma once

#include <cstdint>
#include <string>

#include "weilcid/frobenius.hpp"
#include "weilcid/weil.hpp"

namespace weilcid {

/// Assumptions under which every common-index-divisor verdict holds.
extern const char* const kHypothesisNote;

/// Number of monic irreducible polynomials of degree m over F_p. Memoised.
Integer irred_count(unsigned long m, std::uint64_t p);

/// sum_{d | m} p^d mu(m/d), which equals m * irred_count(m, p).
Integer necklace_sum(const Integer& m, std::uint64_t p);

/// |GSp_{2g}(Z/nZ)|; 1 for n = 1. Memoised.
Integer gsp_order(unsigned g, const Integer& n);

/// gsp_order(g, n) > necklace_sum(ord, p), decided exactly. Orders too large
/// for the right side to be expanded are settled by p^{ord-1} <= the sum.
/// Throws InvariantError when ord does not divide gsp_order(g, n).
bool cid_from_order(unsigned g, std::uint64_t p, const Integer& n, const Integer& ord);

/// Whether p is a common index divisor of the n-division field, assuming
/// surjective mod-n image and End = Z[pi, v]. Requires q = p, n >= 2 and
/// gcd(n, p) = 1 (NotCoprimeError otherwise).
bool is_common_index_divisor(const WeilPoly& w, const Integer& n);

struct SplittingReport {
  Integer n;
  Integer inertia_degree;
  Integer prime_count;
  unsigned ramification_index = 1;
  bool cid = false;
  std::string hypothesis_note;
};

SplittingReport splitting_report(const WeilPoly& w, const Integer& n);

/// Same, reusing a Frobenius matrix already built for w.
SplittingReport splitting_report(const WeilPoly& w, const IntMatrix& sigma, const Integer& n);

}  // namespace weilcid
