// Licensed under the Apache License, Version 2.0 (see LICENSE or
// https://www.apache.org/licenses/LICENSE-2.0).

#pragma once

#include "weilcid/int_poly.hpp"
#include "weilcid/quad_surd.hpp"

namespace weilcid {

/// Number of distinct real roots of the squarefree polynomial h in the
/// half-open interval (lo, hi]. Throws std::invalid_argument when h is not
/// squarefree or when lo >= hi.
unsigned sturm_count(const IntPoly& h, const QuadSurd& lo, const QuadSurd& hi);

/// True when every complex root of h is real and lies in the closed interval
/// [-bound*sqrt(q), bound*sqrt(q)]. Repeated roots are allowed. The zero
/// polynomial and nonzero constants count as vacuously true.
bool all_roots_real_in(const IntPoly& h, const Integer& q, long bound = 2);

}  // namespace weilcid
