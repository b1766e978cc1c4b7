#include "rts/splitter.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace rts {

long SampleBalance::operator()(int depth) const {
  if (depth < 0) return 0;
  if (depth == 0) return min_count;  // c ln c taken as 0 at the origin
  const double raw = std::ceil(static_cast<double>(depth) *
                               std::log(static_cast<double>(depth)));
  return std::max(static_cast<long>(raw), min_count);
}

void SplitParams::validate() const {
  if (!(alpha > 0.0 && alpha <= 0.5))
    throw std::invalid_argument("split params: alpha must be in (0, 0.5]");
  if (!(kappa > 0.0 && kappa <= 1.0))
    throw std::invalid_argument("split params: kappa must be in (0, 1]");
  if (!(beta > 0.0 && beta < 0.5))
    throw std::invalid_argument("split params: beta must be in (0, 0.5)");
  if (balance.min_count < 1)
    throw std::invalid_argument("split params: min_count must be >= 1");
}

long min_child_count(const SplitParams& params, int depth) {
  return static_cast<long>(
      std::ceil(params.beta * static_cast<double>(params.balance(depth))));
}

std::pair<double, double> alpha_interval(const Hyperrectangle& rect, int dir,
                                         double alpha) {
  if (dir < 0 || dir >= rect.dim())
    throw std::invalid_argument("alpha_interval: direction out of range");
  const double lo = rect.lower[dir], hi = rect.upper[dir];
  return {(1.0 - alpha) * lo + alpha * hi, alpha * lo + (1.0 - alpha) * hi};
}

std::vector<double> candidate_values(std::span<const double> sorted_coords,
                                     double lo, double hi) {
  std::vector<double> out;
  for (std::size_t k = 1; k < sorted_coords.size(); ++k) {
    const double a = sorted_coords[k - 1], b = sorted_coords[k];
    if (a == b) continue;
    const double m = 0.5 * (a + b);
    if (m >= lo && m <= hi) out.push_back(m);
  }
  if (out.empty()) out.push_back(0.5 * (lo + hi));
  return out;
}

double mse_of_split(std::span<const CoordResponse> samples, double z) {
  double sum_l = 0.0, sum_r = 0.0;
  long n_l = 0, n_r = 0;
  for (const auto& s : samples) {
    if (s.coord <= z) {
      sum_l += s.response;
      ++n_l;
    } else {
      sum_r += s.response;
      ++n_r;
    }
  }
  const double mean_l = n_l > 0 ? sum_l / static_cast<double>(n_l) : 0.0;
  const double mean_r = n_r > 0 ? sum_r / static_cast<double>(n_r) : 0.0;
  double sse = 0.0;
  for (const auto& s : samples) {
    const double d = s.response - (s.coord <= z ? mean_l : mean_r);
    sse += d * d;
  }
  return sse;
}

static bool child_counts_ok(std::span<const Point* const> i_points, int dir,
                            double z, long need) {
  long left = 0;
  for (const Point* p : i_points)
    if ((*p)[dir] <= z) ++left;
  const long right = static_cast<long>(i_points.size()) - left;
  return left >= need && right >= need;
}

std::optional<SplitDecision> find_best_in_dir(const Hyperrectangle& rect, int depth,
                                              int dir,
                                              std::span<const Point* const> i_points,
                                              std::span<const JSample> j_samples,
                                              const SplitParams& params) {
  const auto [lo, hi] = alpha_interval(rect, dir, params.alpha);
  std::vector<double> coords;
  std::vector<CoordResponse> by_dir;
  coords.reserve(j_samples.size());
  by_dir.reserve(j_samples.size());
  for (const auto& js : j_samples) {
    const double c = (*js.x)[dir];
    coords.push_back(c);
    by_dir.push_back(CoordResponse{c, js.y});
  }
  std::sort(coords.begin(), coords.end());

  const long need = min_child_count(params, depth);
  std::optional<SplitDecision> best;
  for (const double z : candidate_values(coords, lo, hi)) {
    if (!child_counts_ok(i_points, dir, z, need)) continue;
    const double score = mse_of_split(by_dir, z);
    if (!best || score < best->mse)
      best = SplitDecision{dir, z, score, false};
  }
  return best;
}

std::optional<SplitDecision> find_best_all_dirs(const Hyperrectangle& rect, int depth,
                                                std::span<const Point* const> i_points,
                                                std::span<const JSample> j_samples,
                                                const SplitParams& params) {
  std::optional<SplitDecision> best;
  for (int dir = 0; dir < rect.dim(); ++dir) {
    const auto d = find_best_in_dir(rect, depth, dir, i_points, j_samples, params);
    if (d && (!best || d->mse < best->mse)) best = d;
  }
  return best;
}

std::optional<SplitDecision> find_split(const Hyperrectangle& rect, int depth,
                                        std::span<const Point* const> i_points,
                                        std::span<const JSample> j_samples,
                                        const SplitParams& params, RngStream& rng) {
  params.validate();
  const double coin = rng.next_double();
  if (coin < params.kappa) {
    const int dir = rng.uniform_int(rect.dim());
    auto d = find_best_in_dir(rect, depth, dir, i_points, j_samples, params);
    if (d) {
      d->forced_random = true;
      return d;
    }
    // The drawn direction admits no cut; fall through to the full scan.
  }
  return find_best_all_dirs(rect, depth, i_points, j_samples, params);
}

}  // namespace rts
