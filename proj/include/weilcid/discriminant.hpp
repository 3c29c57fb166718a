// Licensed under the Apache License, Version 2.0 (see LICENSE or
// https://www.apache.org/licenses/LICENSE-2.0).

#pragma once

#include "weilcid/int_poly.hpp"

namespace weilcid {

/// Resultant Res(a, b) by the subresultant pseudo-remainder sequence.
Integer resultant(const IntPoly& a, const IntPoly& b);

/// disc(f) = (-1)^(n(n-1)/2) Res(f, f') / lc(f), n = deg f >= 1.
Integer discriminant(const IntPoly& f);

}  // namespace weilcid
