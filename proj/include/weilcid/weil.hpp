// Licensed under the Apache License, Version 2.0 (see LICENSE or
// https://www.apache.org/licenses/LICENSE-2.0).

#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "weilcid/int_poly.hpp"

namespace weilcid {

/// A q-symmetric monic polynomial of degree 2g, q = p^m:
///   f(x) = x^{2g} + a_{2g-1} x^{2g-1} + ... + a_1 x + a_0,
///   a_0 = q^g,  a_i = q^{g-i} a_{2g-i}  (i = 1..g).
/// Only the free coefficients (a_{2g-1}, ..., a_g) are chosen; nothing is
/// asserted about the roots.
struct WeilCandidate {
  std::uint64_t p = 0;
  unsigned m = 1;
  Integer q;
  unsigned g = 0;
  std::vector<Integer> free_coeffs;  // a_{2g-1}, a_{2g-2}, ..., a_g
  IntPoly poly;

  /// a_i, with a_{2g} = 1.
  const Integer& coeff(unsigned i) const { return poly[i]; }
  std::string label() const;
};

/// A candidate whose complex roots all have absolute value sqrt(q).
class WeilPoly {
 public:
  /// nullopt when the candidate fails is_weil.
  static std::optional<WeilPoly> from_candidate(WeilCandidate c);

  std::uint64_t p() const { return c_.p; }
  unsigned m() const { return c_.m; }
  const Integer& q() const { return c_.q; }
  unsigned g() const { return c_.g; }
  const std::vector<Integer>& free_coeffs() const { return c_.free_coeffs; }
  const IntPoly& poly() const { return c_.poly; }
  const Integer& coeff(unsigned i) const { return c_.coeff(i); }
  const WeilCandidate& candidate() const { return c_; }
  std::string label() const { return c_.label(); }

 private:
  explicit WeilPoly(WeilCandidate c) : c_(std::move(c)) {}
  WeilCandidate c_;
};

/// Fills in the lower half of the coefficient vector from the symmetry
/// relations. Throws std::invalid_argument for a non-prime p, m = 0, g = 0
/// or a free-coefficient list whose length is not g.
WeilCandidate from_free_coeffs(std::uint64_t p, unsigned m, unsigned g, std::vector<Integer> free);

/// Convenience for the common prime-field case with small coefficients.
WeilCandidate from_free_coeffs(std::uint64_t p, unsigned g, std::initializer_list<long> free);

/// The degree-g polynomial h with f(x) = x^g h(x + q/x).
IntPoly real_companion(const WeilCandidate& c);

/// True when every complex root of f has absolute value sqrt(q), decided by
/// counting the real roots of the real companion in [-2 sqrt q, 2 sqrt q].
bool is_weil(const WeilCandidate& c);

/// Closed-form coefficient test for degree 4: |a3| <= 2 floor(2 sqrt q) and
/// 2|a3| sqrt q - 2q <= a2 <= a3^2/4 + 2q, compared exactly.
bool is_weil_dim2(const Integer& a3, const Integer& a2, const Integer& q);

/// Closed-form coefficient test for degree 6 (the four conditions, with
/// strict inequalities in (1), the left half of (2) and (4)). The reducible
/// family (x^2 - q)^2 (x^2 + b x + q) is not accepted here.
bool is_weil_dim3(const Integer& a5, const Integer& a4, const Integer& a3, const Integer& q);

/// Irreducibility over Q. Requires q not a perfect square (odd m).
bool is_irreducible(const WeilPoly& w);

/// Length of the slope-zero part of the p-adic Newton polygon of f.
unsigned p_rank(const WeilPoly& w);

/// Optional pinning of free coefficients, keyed by the index i of a_i.
struct CoeffFilter {
  std::map<unsigned, Integer> fixed;

  /// Parses "a5=0,a4=-1" (whitespace tolerated). Throws std::invalid_argument.
  static CoeffFilter parse(const std::string& spec);
  /// Checks that every pinned index is a free index for dimension g.
  void validate(unsigned g) const;
  bool admits(const WeilCandidate& c) const;
  bool empty() const { return fixed.empty(); }
  std::string to_string() const;
};

/// Visits every Weil q-polynomial of degree 2g (irreducible or not) whose
/// free coefficients pass the filter, in lexicographic order of the free
/// coefficients. Works for any g >= 1 by pruning with the derivatives of
/// the real companion, which must stay real-rooted in [-2 sqrt q, 2 sqrt q].
void for_each_weil_free_coeffs(const Integer& q, unsigned g, const CoeffFilter& filter,
                               const std::function<void(const std::vector<Integer>&)>& visit);

/// All irreducible Weil p^m-polynomials of degree 2g passing the filter, in
/// lexicographic order of the free coefficients. g = 2 and g = 3 use the
/// closed-form coefficient bounds; other g use the derivative-pruned search.
std::vector<WeilPoly> enumerate_weil(std::uint64_t p, unsigned g, unsigned m = 1,
                                     const CoeffFilter& filter = {});

}  // namespace weilcid
