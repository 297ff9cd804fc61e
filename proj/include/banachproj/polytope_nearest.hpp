#pragma once

#include <vector>

#include "banachproj/space.hpp"

namespace banachproj {

/// Euclidean nearest point of conv(vertices) to x, with the convex weights
/// that produce it.
struct HullNearest {
  Point point;
  std::vector<double> weights;
  double distance = 0.0;  // Euclidean
};

/// Wolfe's minimum-norm-point algorithm on the translated vertex set. Exact
/// up to rounding; terminates in finitely many corral changes.
HullNearest euclidean_nearest_in_hull(const std::vector<Point>& vertices,
                                      const Point& x);

}  // namespace banachproj
