#pragma once

#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "rts/geometry.hpp"
#include "rts/rng.hpp"

namespace rts {

// Depth-indexed sample-balance schedule:
//   f(-1) = 0,  f(0) = min_count,  f(c) = max(ceil(c ln c), min_count) for c >= 1.
struct SampleBalance {
  long min_count = 15;
  long operator()(int depth) const;
};

struct SplitParams {
  double alpha = 0.1;       // spatial balance share, (0, 0.5]
  double kappa = 0.1;       // forced-random-direction probability, (0, 1]
  double beta = 1.0 / 3.0;  // child I-sample share, (0, 0.5)
  SampleBalance balance;

  void validate() const;  // throws std::invalid_argument on a bad range
};

struct SplitDecision {
  int dir = -1;
  double z = 0.0;
  double mse = 0.0;            // J-cohort squared-error score of the cut
  bool forced_random = false;  // the kappa branch fixed the direction
};

struct CoordResponse {
  double coord;
  double response;
};

// J-sample view handed to the splitter; points stay owned by the store.
struct JSample {
  const Point* x;
  double y;
};

// Fewest I-samples each child must keep: ceil(beta * f(depth)).
long min_child_count(const SplitParams& params, int depth);

// Admissible cut interval along dir: both children keep at least an alpha
// share of the parent's extent. Closed on both ends.
std::pair<double, double> alpha_interval(const Hyperrectangle& rect, int dir,
                                         double alpha);

// Midpoints of consecutive distinct sorted coordinates, clipped to [lo, hi];
// falls back to the interval midpoint when none survive.
std::vector<double> candidate_values(std::span<const double> sorted_coords,
                                     double lo, double hi);

// Sum of within-child squared response deviations, children split at
// coord <= z. A side with no samples contributes nothing. Accumulates in
// input order so equal scores are bit-comparable.
double mse_of_split(std::span<const CoordResponse> samples, double z);

// Best admissible cut restricted to one direction; nullopt when no candidate
// satisfies both the alpha interval and the child-count floor.
std::optional<SplitDecision> find_best_in_dir(const Hyperrectangle& rect, int depth,
                                              int dir,
                                              std::span<const Point* const> i_points,
                                              std::span<const JSample> j_samples,
                                              const SplitParams& params);

// Best admissible cut over all directions, ties broken by smaller (dir, z).
std::optional<SplitDecision> find_best_all_dirs(const Hyperrectangle& rect, int depth,
                                                std::span<const Point* const> i_points,
                                                std::span<const JSample> j_samples,
                                                const SplitParams& params);

// Full splitting criterion: with probability kappa a uniformly drawn
// direction is searched first (forced_random on success); otherwise, or when
// that direction has no admissible cut, every direction is scanned.
// Consumes one coin draw always and one direction draw on the kappa branch.
std::optional<SplitDecision> find_split(const Hyperrectangle& rect, int depth,
                                        std::span<const Point* const> i_points,
                                        std::span<const JSample> j_samples,
                                        const SplitParams& params, RngStream& rng);

}  // namespace rts
