#pragma once

#include <utility>
#include <vector>

#include "rts/rng.hpp"

namespace rts {

using Point = std::vector<double>;

// Axis-aligned box. Tree regions live in the normalized unit cube; the same
// type carries user-space boxes (objective domains, reported regions).
struct Hyperrectangle {
  std::vector<double> lower;
  std::vector<double> upper;

  Hyperrectangle(std::vector<double> lo, std::vector<double> hi);
  static Hyperrectangle unit(int dim);

  int dim() const { return static_cast<int>(lower.size()); }
  double volume() const;
  double diameter() const;
  bool contains(const Point& p) const;       // closed on all faces
  double distance_to(const Point& p) const;  // 0 when p is inside
  Point midpoint() const;
};

// One uniform draw per coordinate, in coordinate order.
Point uniform_sample(const Hyperrectangle& rect, RngStream& rng);

// Partition along dir at z; the left box keeps x[dir] <= z.
// Requires lower[dir] < z < upper[dir].
std::pair<Hyperrectangle, Hyperrectangle> split_rect(const Hyperrectangle& rect,
                                                     int dir, double z);

}  // namespace rts
