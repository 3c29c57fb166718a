// Licensed under the Apache License, Version 2.0 (see LICENSE or
// https://www.apache.org/licenses/LICENSE-2.0).

#pragma once

#include <cstdint>
#include <vector>

#include "weilcid/int_poly.hpp"

namespace weilcid {

/// One irreducible factor of a polynomial over F_l: its degree and the
/// exponent with which it divides.
struct FactorDegree {
  unsigned degree;
  unsigned multiplicity;
  friend auto operator<=>(const FactorDegree&, const FactorDegree&) = default;
};

/// Degrees and multiplicities of the irreducible factors of f mod l, one
/// entry per distinct irreducible factor, sorted. Uses squarefree
/// decomposition followed by distinct-degree factorization. Requires f
/// monic and l prime below 2^63.
std::vector<FactorDegree> factor_degrees_mod(const IntPoly& f, std::uint64_t l);

/// True when f mod l is irreducible of full degree.
bool irreducible_mod(const IntPoly& f, std::uint64_t l);

}  // namespace weilcid
