// Licensed under the Apache License, Version 2.0 (see LICENSE or
// https://www.apache.org/licenses/LICENSE-2.0).

#include "weilcid/quad_surd.hpp"

#include <stdexcept>

namespace weilcid {

namespace {

int sgn(const Rational& r) { return sgn(r.get_num()); }

const Integer& common_radicand(const QuadSurd& a, const QuadSurd& b) {
  if (a.is_rational()) return b.radicand();
  if (b.is_rational() || a.radicand() == b.radicand()) return a.radicand();
  throw std::invalid_argument("QuadSurd: mixed radicands " + a.radicand().get_str() + " and " +
                              b.radicand().get_str());
}

}  // namespace

QuadSurd::QuadSurd(Rational rational_part, Rational surd_part, const Integer& radicand)
    : u_(std::move(rational_part)), w_(std::move(surd_part)), q_(radicand) {
  if (q_ < 0) throw std::invalid_argument("QuadSurd: negative radicand");
  u_.canonicalize();
  w_.canonicalize();
  if (is_perfect_square(q_)) {
    u_ += w_ * Rational(isqrt(q_));
    w_ = 0;
  }
  if (w_ == 0) q_ = 0;
}

int QuadSurd::sign() const {
  const int su = sgn(u_);
  const int sw = sgn(w_);
  if (sw == 0) return su;
  if (su == 0 || su == sw) return sw;
  // Opposite signs: the larger magnitude wins; equality is impossible for a
  // non-square radicand unless both parts vanish.
  Rational lhs = u_ * u_;
  Rational rhs = Rational(q_) * w_ * w_;
  return lhs > rhs ? su : sw;
}

QuadSurd QuadSurd::operator-() const { return QuadSurd(-u_, -w_, q_); }

QuadSurd operator+(const QuadSurd& a, const QuadSurd& b) {
  const Integer& q = common_radicand(a, b);
  return QuadSurd(a.u_ + b.u_, a.w_ + b.w_, q);
}

QuadSurd operator-(const QuadSurd& a, const QuadSurd& b) {
  const Integer& q = common_radicand(a, b);
  return QuadSurd(a.u_ - b.u_, a.w_ - b.w_, q);
}

QuadSurd operator*(const QuadSurd& a, const QuadSurd& b) {
  const Integer q = common_radicand(a, b);
  return QuadSurd(a.u_ * b.u_ + Rational(q) * a.w_ * b.w_, a.u_ * b.w_ + a.w_ * b.u_, q);
}

QuadSurd operator*(const QuadSurd& a, const Rational& c) { return QuadSurd(a.u_ * c, a.w_ * c, a.q_); }

std::string QuadSurd::to_string() const {
  if (is_rational()) return u_.get_str();
  return u_.get_str() + " + " + w_.get_str() + "*sqrt(" + q_.get_str() + ")";
}

QuadSurd poly_eval_surd(const IntPoly& f, const QuadSurd& x) {
  QuadSurd acc;
  for (int i = f.degree(); i >= 0; --i) acc = acc * x + QuadSurd::rational(Rational(f[i]));
  return acc;
}

}  // namespace weilcid
