#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "rts/objective.hpp"
#include "rts/search.hpp"

namespace rts {

enum class BaselineKind { kNone, kUniformRandom };

struct ExperimentConfig {
  std::string objective = "rastrigin";
  int dim = 2;
  Sense sense = Sense::kMinimize;
  NoiseSpec noise = NoiseSpec::gaussian(1.0);
  long budget = 0;
  long stage1_budget = 0;
  SplitParams split;
  double cp = 2.0;
  int reps = 100;
  std::uint64_t base_seed = 42;
  BaselineKind baseline = BaselineKind::kNone;
  int workers = 1;
  std::string out_dir = "results";
  bool dump_tree = false;
  bool dump_samples = false;
};

struct RepRecord {
  int rep = 0;
  std::uint64_t seed = 0;
  double true_value = 0.0;
  double estimate = 0.0;
  long total_sims = 0;
  long leaf_count = 0;
  int max_depth = 0;
  int min_leaf_depth = 0;
  long deferred_splits = 0;
};

struct BaselineRecord {
  int rep = 0;
  std::uint64_t seed = 0;
  double true_value = 0.0;  // mu at the best-observed point, user sense
  double estimate = 0.0;    // best observed response, user sense
  long total_sims = 0;
};

struct StatRow {
  std::string algorithm;
  std::string metric;  // true_value | estimate
  double mean, rmse, best, q25, q50, q75, worst;
};

struct ExperimentResult {
  std::vector<RepRecord> reps;
  std::vector<BaselineRecord> baseline;
  std::vector<StatRow> summary;
};

// Spends the whole budget on uniform points and returns the best observed one.
BaselineRecord uniform_random_baseline(const Objective& objective, const NoiseSpec& noise,
                                       long budget, std::uint64_t seed, int rep);

// Runs all replications (concurrently up to cfg.workers; records always land
// in replication order) plus the optional baseline, and summarizes.
ExperimentResult run_experiment(const ExperimentConfig& cfg);

// Writes reps.csv, summary.csv (and baseline_reps.csv when present) under
// cfg.out_dir, and prints the aligned summary table to os.
void emit(const ExperimentResult& res, const ExperimentConfig& cfg, std::ostream& os);

extern const char* const kRepCsvHeader;

}  // namespace rts
