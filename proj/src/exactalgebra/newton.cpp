// Licensed under the Apache License, Version 2.0 (see LICENSE or
// https://www.apache.org/licenses/LICENSE-2.0).

#include "weilcid/newton.hpp"

#include <stdexcept>

namespace weilcid {

unsigned NewtonPolygon::slope_zero_length() const {
  for (const auto& s : segments)
    if (s.slope == 0) return s.length;
  return 0;
}

NewtonPolygon newton_polygon(const IntPoly& f, const Integer& p) {
  if (!f.is_monic()) throw std::invalid_argument("newton_polygon: polynomial must be monic");
  struct Point {
    long x;
    long y;
  };
  std::vector<Point> pts;
  for (int i = 0; i <= f.degree(); ++i)
    if (f[i] != 0) pts.push_back({i, static_cast<long>(valuation(f[i], p))});

  // Monotone chain, lower hull only; collinear points are dropped so each
  // segment has a distinct slope.
  std::vector<Point> hull;
  for (const auto& pt : pts) {
    while (hull.size() >= 2) {
      const Point& a = hull[hull.size() - 2];
      const Point& b = hull.back();
      const long cross = (b.x - a.x) * (pt.y - a.y) - (b.y - a.y) * (pt.x - a.x);
      if (cross <= 0)
        hull.pop_back();
      else
        break;
    }
    hull.push_back(pt);
  }

  NewtonPolygon poly;
  for (std::size_t i = 1; i < hull.size(); ++i) {
    const long dx = hull[i].x - hull[i - 1].x;
    const long dy = hull[i].y - hull[i - 1].y;
    Rational slope{Integer(dy), Integer(dx)};
    slope.canonicalize();
    poly.segments.push_back({slope, static_cast<unsigned>(dx)});
  }
  return poly;
}

}  // namespace weilcid
