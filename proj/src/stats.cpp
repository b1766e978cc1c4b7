#include "rts/stats.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

namespace rts {

double mean_of(std::span<const double> v) {
  if (v.empty()) throw std::invalid_argument("mean_of: empty input");
  double s = 0.0;
  for (const double x : v) s += x;
  return s / static_cast<double>(v.size());
}

double rmse_against(std::span<const double> v, double target) {
  if (v.empty()) throw std::invalid_argument("rmse_against: empty input");
  double s = 0.0;
  for (const double x : v) {
    const double d = x - target;
    s += d * d;
  }
  return std::sqrt(s / static_cast<double>(v.size()));
}

double quantile(std::span<const double> v, double q) {
  if (v.empty()) throw std::invalid_argument("quantile: empty input");
  if (!(q >= 0.0 && q <= 1.0)) throw std::invalid_argument("quantile: q outside [0, 1]");
  std::vector<double> sorted(v.begin(), v.end());
  std::sort(sorted.begin(), sorted.end());
  const double h = q * static_cast<double>(sorted.size() - 1);
  const std::size_t lo = static_cast<std::size_t>(h);
  if (lo + 1 >= sorted.size()) return sorted.back();
  const double frac = h - static_cast<double>(lo);
  return sorted[lo] + frac * (sorted[lo + 1] - sorted[lo]);
}

}  // namespace rts
