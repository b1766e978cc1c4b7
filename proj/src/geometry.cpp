#include "rts/geometry.hpp"

#include <cmath>
#include <stdexcept>

namespace rts {

Hyperrectangle::Hyperrectangle(std::vector<double> lo, std::vector<double> hi)
    : lower(std::move(lo)), upper(std::move(hi)) {
  if (lower.empty() || lower.size() != upper.size())
    throw std::invalid_argument("hyperrectangle: mismatched or empty bounds");
  for (std::size_t j = 0; j < lower.size(); ++j) {
    if (!(lower[j] < upper[j]))
      throw std::invalid_argument("hyperrectangle: lower bound must be below upper");
  }
}

Hyperrectangle Hyperrectangle::unit(int dim) {
  if (dim < 1) throw std::invalid_argument("hyperrectangle: dim must be >= 1");
  return Hyperrectangle(std::vector<double>(dim, 0.0), std::vector<double>(dim, 1.0));
}

double Hyperrectangle::volume() const {
  double v = 1.0;
  for (std::size_t j = 0; j < lower.size(); ++j) v *= upper[j] - lower[j];
  return v;
}

double Hyperrectangle::diameter() const {
  double s = 0.0;
  for (std::size_t j = 0; j < lower.size(); ++j) {
    const double w = upper[j] - lower[j];
    s += w * w;
  }
  return std::sqrt(s);
}

bool Hyperrectangle::contains(const Point& p) const {
  if (p.size() != lower.size()) return false;
  for (std::size_t j = 0; j < lower.size(); ++j) {
    if (p[j] < lower[j] || p[j] > upper[j]) return false;
  }
  return true;
}

double Hyperrectangle::distance_to(const Point& p) const {
  if (p.size() != lower.size())
    throw std::invalid_argument("distance_to: dimension mismatch");
  double s = 0.0;
  for (std::size_t j = 0; j < lower.size(); ++j) {
    double d = 0.0;
    if (p[j] < lower[j]) d = lower[j] - p[j];
    else if (p[j] > upper[j]) d = p[j] - upper[j];
    s += d * d;
  }
  return std::sqrt(s);
}

Point Hyperrectangle::midpoint() const {
  Point m(lower.size());
  for (std::size_t j = 0; j < lower.size(); ++j)
    m[j] = lower[j] + 0.5 * (upper[j] - lower[j]);
  return m;
}

Point uniform_sample(const Hyperrectangle& rect, RngStream& rng) {
  Point p(rect.lower.size());
  for (std::size_t j = 0; j < p.size(); ++j)
    p[j] = rng.uniform(rect.lower[j], rect.upper[j]);
  return p;
}

std::pair<Hyperrectangle, Hyperrectangle> split_rect(const Hyperrectangle& rect,
                                                     int dir, double z) {
  if (dir < 0 || dir >= rect.dim())
    throw std::invalid_argument("split_rect: direction out of range");
  if (!(rect.lower[dir] < z && z < rect.upper[dir]))
    throw std::invalid_argument("split_rect: cut outside the open extent");
  Hyperrectangle left = rect;
  Hyperrectangle right = rect;
  left.upper[dir] = z;
  right.lower[dir] = z;
  return {std::move(left), std::move(right)};
}

}  // namespace rts
