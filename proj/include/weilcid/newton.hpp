// Licensed under the Apache License, Version 2.0 (see LICENSE or
// https://www.apache.org/licenses/LICENSE-2.0).

#pragma once

#include <vector>

#include "weilcid/int_poly.hpp"

namespace weilcid {

struct NewtonSegment {
  Rational slope;
  unsigned length;  // horizontal length
  friend bool operator==(const NewtonSegment&, const NewtonSegment&) = default;
};

/// Lower convex hull of the points (i, v_p(a_i)) over nonzero coefficients,
/// as segments of strictly increasing slope. Zero coefficients sit at
/// infinity, so the lengths sum to the degree whenever a_0 != 0.
struct NewtonPolygon {
  std::vector<NewtonSegment> segments;

  /// Total horizontal length of the slope-zero segment, 0 if there is none.
  unsigned slope_zero_length() const;
};

/// Requires f monic (so the right-most point sits at height 0) and p prime.
NewtonPolygon newton_polygon(const IntPoly& f, const Integer& p);

}  // namespace weilcid
