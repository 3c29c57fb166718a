// Licensed under the Apache License, Version 2.0 (see LICENSE or
// https://www.apache.org/licenses/LICENSE-2.0).

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "weilcid/integer.hpp"

namespace weilcid {

/// Dense univariate polynomial with arbitrary-precision integer
/// coefficients; index i holds the coefficient of x^i. Trailing zeros are
/// always stripped, so the zero polynomial has no coefficients and degree -1.
class IntPoly {
 public:
  IntPoly() = default;
  explicit IntPoly(std::vector<Integer> coeffs);
  IntPoly(std::initializer_list<long> coeffs);

  static IntPoly monomial(unsigned degree, const Integer& coeff = 1);

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  bool is_monic() const { return !is_zero() && coeffs_.back() == 1; }

  /// Coefficient of x^i; zero beyond the degree.
  const Integer& operator[](std::size_t i) const;
  const Integer& leading() const;
  const std::vector<Integer>& coeffs() const { return coeffs_; }

  IntPoly derivative() const;
  /// Non-negative gcd of the coefficients (0 for the zero polynomial).
  Integer content() const;
  /// Divides out the content and makes the leading coefficient positive.
  IntPoly primitive_part() const;

  Rational eval(const Rational& x) const;

  IntPoly operator-() const;
  IntPoly& operator+=(const IntPoly& o);
  IntPoly& operator-=(const IntPoly& o);
  IntPoly& operator*=(const Integer& c);

  friend IntPoly operator+(IntPoly a, const IntPoly& b) { return a += b; }
  friend IntPoly operator-(IntPoly a, const IntPoly& b) { return a -= b; }
  friend IntPoly operator*(IntPoly a, const Integer& c) { return a *= c; }
  friend IntPoly operator*(const Integer& c, IntPoly a) { return a *= c; }
  friend IntPoly operator*(const IntPoly& a, const IntPoly& b);
  friend bool operator==(const IntPoly& a, const IntPoly& b) { return a.coeffs_ == b.coeffs_; }

  std::string to_string(char var = 'x') const;

 private:
  void normalize();
  std::vector<Integer> coeffs_;
};

/// f(x) computed exactly by Horner's rule.
Rational poly_eval(const IntPoly& f, const Rational& x);

/// Pseudo-remainder: lc(b)^(deg a - deg b + 1) * a = q*b + r with deg r < deg b.
IntPoly pseudo_remainder(const IntPoly& a, const IntPoly& b);

/// Quotient a / b when b divides a exactly over Z[x], nullopt otherwise.
std::optional<IntPoly> divide_exact(const IntPoly& a, const IntPoly& b);

/// Primitive gcd over Q[x], normalised to positive leading coefficient.
IntPoly primitive_gcd(IntPoly a, IntPoly b);

/// Squarefree part f / gcd(f, f'), primitive with positive leading coefficient.
IntPoly squarefree_part(const IntPoly& f);

/// Composition f(g(x)).
IntPoly compose(const IntPoly& f, const IntPoly& g);

}  // namespace weilcid
