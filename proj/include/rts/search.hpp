#pragma once

#include <cstdint>

#include "rts/objective.hpp"
#include "rts/samples.hpp"
#include "rts/splitter.hpp"
#include "rts/tree.hpp"

namespace rts {

struct SearchConfig {
  long budget = 0;         // total simulator calls (may overshoot by one top-up batch)
  long stage1_budget = 0;  // uniform warmup size
  SplitParams split;
  double cp = 2.0;         // UCT exploration constant, >= 0
  std::uint64_t seed = 0;

  // Diagnostic for honesty audits: added to every I response at the source.
  double i_response_offset = 0.0;

  void validate() const;  // throws std::invalid_argument
};

struct RunResult {
  Hyperrectangle selected_region;  // user units
  Point midpoint;                  // user units
  double estimate = 0.0;           // selected leaf I-mean, user sense
  double true_value = 0.0;         // mu at the midpoint, user sense
  long total_sims = 0;
  long leaf_count = 0;
  int max_depth = 0;
  int min_leaf_depth = 0;
  long deferred_splits = 0;
};

double ucb_value(double mean, long n_parent, long n_child, double cp);

// Root-to-leaf descent by the larger child UCB; ties go left.
NodeId uct_select(const Tree& tree, double cp);

// One full replication; owns its tree, store and RNG stream.
class RegularTreeSearch {
 public:
  RegularTreeSearch(Objective objective, NoiseSpec noise, SearchConfig cfg);

  RunResult run();

  const Tree& tree() const { return tree_; }
  const SampleStore& store() const { return store_; }
  long deferred_splits() const { return deferred_; }

 private:
  RunResult extract() const;

  Objective objective_;
  NoiseSpec noise_;
  SearchConfig cfg_;
  RngStream rng_;
  Tree tree_;
  SampleStore store_;
  long deferred_ = 0;
  bool ran_ = false;
};

RunResult run_search(const Objective& objective, const NoiseSpec& noise,
                     const SearchConfig& cfg);

}  // namespace rts
