// Licensed under the Apache License, Version 2.0 (see LICENSE or
// https://www.apache.org/licenses/LICENSE-2.0).

#pragma once

#include <string>

#include "weilcid/int_poly.hpp"
#include "weilcid/integer.hpp"

namespace weilcid {

/// Exact element u + w*sqrt(q) of Q(sqrt(q)).
///
/// A perfect-square radicand is folded into the rational part at
/// construction; the value then carries radicand 0 and surd part 0. Two
/// values can be combined when they share a radicand or when either one is
/// purely rational.
class QuadSurd {
 public:
  QuadSurd() = default;
  QuadSurd(Rational rational_part, Rational surd_part, const Integer& radicand);
  static QuadSurd rational(Rational r) { return QuadSurd(std::move(r), 0, 0); }

  const Rational& rational_part() const { return u_; }
  const Rational& surd_part() const { return w_; }
  const Integer& radicand() const { return q_; }
  bool is_rational() const { return w_ == 0; }

  /// -1, 0 or +1, decided by comparing u^2 with q*w^2.
  int sign() const;

  QuadSurd operator-() const;
  friend QuadSurd operator+(const QuadSurd& a, const QuadSurd& b);
  friend QuadSurd operator-(const QuadSurd& a, const QuadSurd& b);
  friend QuadSurd operator*(const QuadSurd& a, const QuadSurd& b);
  friend QuadSurd operator*(const QuadSurd& a, const Rational& c);
  friend bool operator==(const QuadSurd& a, const QuadSurd& b) { return (a - b).sign() == 0; }
  friend bool operator<(const QuadSurd& a, const QuadSurd& b) { return (a - b).sign() < 0; }

  std::string to_string() const;

 private:
  Rational u_ = 0;
  Rational w_ = 0;
  Integer q_ = 0;
};

/// f(x) evaluated exactly in Q(sqrt(q)).
QuadSurd poly_eval_surd(const IntPoly& f, const QuadSurd& x);

}  // namespace weilcid
