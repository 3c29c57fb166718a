// Licensed under the Apache License, Version 2.0 (see LICENSE or
// https://www.apache.org/licenses/LICENSE-2.0).

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "weilcid/factorize.hpp"
#include "weilcid/int_poly.hpp"

namespace weilcid {

/// Dense square matrix over Z.
class IntMatrix {
 public:
  IntMatrix() = default;
  explicit IntMatrix(std::size_t n) : n_(n), e_(n * n) {}
  IntMatrix(std::initializer_list<std::initializer_list<long>> rows);

  static IntMatrix identity(std::size_t n);

  std::size_t size() const { return n_; }
  Integer& operator()(std::size_t r, std::size_t c) { return e_[r * n_ + c]; }
  const Integer& operator()(std::size_t r, std::size_t c) const { return e_[r * n_ + c]; }

  IntMatrix operator*(const IntMatrix& o) const;
  IntMatrix operator*(const Integer& s) const;
  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

  Integer trace() const;
  /// Fraction-free (Bareiss) elimination.
  Integer det() const;
  /// det(xI - M), by Hessenberg reduction over Q.
  IntPoly charpoly() const;

  std::string to_string() const;

 private:
  std::size_t n_ = 0;
  std::vector<Integer> e_;
};

/// Square matrix of residues in [0, n), 2 <= n < 2^63.
class ModMatrix {
 public:
  ModMatrix(std::size_t size, std::uint64_t modulus);

  static ModMatrix identity(std::size_t size, std::uint64_t modulus);

  std::size_t size() const { return n_; }
  std::uint64_t modulus() const { return mod_; }
  std::uint64_t operator()(std::size_t r, std::size_t c) const { return e_[r * n_ + c]; }
  /// Stores v mod n.
  void set(std::size_t r, std::size_t c, std::uint64_t v) { e_[r * n_ + c] = v % mod_; }

  ModMatrix operator*(const ModMatrix& o) const;
  ModMatrix pow(const Integer& e) const;
  bool is_identity() const;
  /// Same entries read modulo a divisor d of the modulus.
  ModMatrix reduce(std::uint64_t d) const;
  friend bool operator==(const ModMatrix&, const ModMatrix&) = default;

  std::string to_string() const;

 private:
  std::size_t n_;
  std::uint64_t mod_;
  std::vector<std::uint64_t> e_;
};

/// Entrywise reduction; throws std::invalid_argument for n < 2 or n >= 2^63.
ModMatrix reduce_mod(const IntMatrix& m, const Integer& n);

/// det(xI - M) over F_l, l prime, as an integer polynomial with coefficients
/// in [0, l).
IntPoly charpoly_mod(const ModMatrix& m);

/// Least t >= 1 with M^t = I mod n. Throws NotCoprimeError when det M is not
/// a unit mod n.
Integer matrix_order_mod(const ModMatrix& m);

/// As above, with the characteristic polynomial over Z supplied by the
/// caller (it is then only reduced, never recomputed).
Integer matrix_order_mod(const ModMatrix& m, const IntPoly& charpoly);

/// Factorization of l^d - 1, assembled from cached cyclotomic values.
const Factorization& factor_l_pow_minus_one(std::uint64_t l, unsigned d);

}  // namespace weilcid
