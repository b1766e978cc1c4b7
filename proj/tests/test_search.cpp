#include <cmath>
#include <stdexcept>

#include "doctest.h"
#include "rts/search.hpp"

using namespace rts;

namespace {

Objective constant_surface(double value) {
  ObjectiveSpec spec{"flat", 1, Hyperrectangle::unit(1), Sense::kMinimize,
                     std::nullopt, std::nullopt};
  return Objective(std::move(spec), [value](const Point&) { return value; });
}

SearchConfig small_config(std::uint64_t seed) {
  SearchConfig cfg;
  cfg.budget = 900;
  cfg.stage1_budget = 300;
  cfg.seed = seed;
  return cfg;
}

}  // namespace

TEST_CASE("ucb hand value") {
  CHECK(ucb_value(2.0, 100, 25, 2.0) ==
        doctest::Approx(3.213941703508117).epsilon(1e-15));
  CHECK(ucb_value(2.0, 100, 25, 0.0) == 2.0);  // cp = 0 is pure greed
  CHECK(ucb_value(-1.0, 50, 10, 1.0) > -1.0);
}

TEST_CASE("config validation") {
  SearchConfig cfg = small_config(1);
  CHECK_NOTHROW(cfg.validate());
  cfg.stage1_budget = 0;
  CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);
  cfg = small_config(1);
  cfg.budget = cfg.stage1_budget;  // stage 2 must get something to do
  CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);
  cfg = small_config(1);
  cfg.cp = -0.1;
  CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);
}

TEST_CASE("uct_select trades exploitation against exploration") {
  Tree tree(1);
  SampleStore store;
  tree.apply_split(store, 0, SplitDecision{0, 0.5, 0.0, false});
  const NodeId left = tree.node(0).left;
  const NodeId right = tree.node(0).right;
  for (int i = 0; i < 3; ++i) {
    tree.add_observation(store, left, {0.25}, 10.0, Cohort::kI);
    tree.add_observation(store, right, {0.75}, 0.0, Cohort::kI);
  }

  SUBCASE("greedy selection always takes the better mean") {
    for (int i = 0; i < 50; ++i) {
      const NodeId pick = uct_select(tree, 0.0);
      CHECK(pick == left);
      tree.add_observation(store, pick, {0.25}, 10.0, Cohort::kI);
    }
  }

  SUBCASE("a huge exploration constant keeps both children visited") {
    int right_visits = 0;
    for (int i = 0; i < 100; ++i) {
      const NodeId pick = uct_select(tree, 1e6);
      if (pick == right) ++right_visits;
      tree.add_observation(store, pick, {pick == left ? 0.25 : 0.75},
                           pick == left ? 10.0 : 0.0, Cohort::kI);
    }
    // Visit counts stay balanced when the bonus dwarfs the means.
    CHECK(right_visits >= 40);
    CHECK(right_visits <= 60);
  }

  SUBCASE("exact ties go left") {
    // Equal means and equal counts: both UCB terms match bit for bit.
    tree.add_observation(store, left, {0.25}, 10.0, Cohort::kI);
    tree.add_observation(store, right, {0.75}, 40.0, Cohort::kI);
    REQUIRE(store.leaf_mean_i(left) == store.leaf_mean_i(right));
    CHECK(uct_select(tree, 2.0) == left);
    CHECK(uct_select(tree, 0.0) == left);
  }
}

TEST_CASE("uct_select requires I-samples under every child") {
  Tree tree(1);
  SampleStore store;
  tree.apply_split(store, 0, SplitDecision{0, 0.5, 0.0, false});
  CHECK_THROWS_AS(uct_select(tree, 2.0), std::logic_error);
}

TEST_CASE("a constant noise-free surface is estimated exactly") {
  SearchConfig cfg;
  cfg.budget = 120;
  cfg.stage1_budget = 40;
  cfg.seed = 5;
  const RunResult r = run_search(constant_surface(5.0), NoiseSpec::none(), cfg);
  CHECK(r.estimate == 5.0);
  CHECK(r.true_value == 5.0);
  CHECK(r.total_sims >= 120);
}

TEST_CASE("identical configs replay bit for bit") {
  const Objective obj = make_objective("rastrigin", 2);
  const auto noise = NoiseSpec::gaussian(1.0);
  const RunResult a = run_search(obj, noise, small_config(97));
  const RunResult b = run_search(obj, noise, small_config(97));
  CHECK(a.estimate == b.estimate);
  CHECK(a.true_value == b.true_value);
  CHECK(a.total_sims == b.total_sims);
  CHECK(a.leaf_count == b.leaf_count);
  CHECK(a.max_depth == b.max_depth);
  CHECK(a.min_leaf_depth == b.min_leaf_depth);
  CHECK(a.deferred_splits == b.deferred_splits);
  CHECK(a.selected_region.lower == b.selected_region.lower);
  CHECK(a.selected_region.upper == b.selected_region.upper);
  CHECK(a.midpoint == b.midpoint);

  const RunResult c = run_search(obj, noise, small_config(98));
  CHECK(a.estimate != c.estimate);  // different stream, different draws
}

TEST_CASE("result fields agree with the final tree") {
  RegularTreeSearch search(make_objective("rastrigin", 2), NoiseSpec::gaussian(1.0),
                           small_config(12));
  const RunResult r = search.run();
  CHECK(r.total_sims == long(search.store().size()));
  CHECK(r.leaf_count == long(search.tree().leaf_count()));
  CHECK(r.max_depth == search.tree().max_leaf_depth());
  CHECK(r.min_leaf_depth == search.tree().min_leaf_depth());
  CHECK(r.min_leaf_depth <= r.max_depth);
  CHECK(r.deferred_splits == search.deferred_splits());

  // Reported geometry is in user units.
  CHECK(r.selected_region.lower[0] >= -5.0);
  CHECK(r.selected_region.upper[0] <= 5.0);
  CHECK(r.selected_region.contains(r.midpoint));
  CHECK(r.true_value == make_objective("rastrigin", 2).eval_true(r.midpoint));

  CHECK_THROWS_AS(search.run(), std::logic_error);  // one replication per object
}

TEST_CASE("budget overshoot is at most one top-up batch") {
  const Objective obj = make_objective("rastrigin", 2);
  for (std::uint64_t seed : {1ULL, 2ULL, 3ULL, 4ULL}) {
    SearchConfig cfg = small_config(seed);
    cfg.budget = 1500;
    RegularTreeSearch search(obj, NoiseSpec::gaussian(1.0), cfg);
    const RunResult r = search.run();
    CHECK(r.total_sims >= 1500);
    CHECK(r.total_sims - 1500 <= cfg.split.balance(r.max_depth));
  }
}

TEST_CASE("shifting every I response shifts estimates and nothing else") {
  const Objective obj = make_objective("rastrigin", 2);
  const auto noise = NoiseSpec::gaussian(1.0);
  SearchConfig base = small_config(55);
  SearchConfig shifted = base;
  shifted.i_response_offset = 77.0;

  RegularTreeSearch a(obj, noise, base);
  RegularTreeSearch b(obj, noise, shifted);
  a.run();
  b.run();

  REQUIRE(a.tree().node_count() == b.tree().node_count());
  for (NodeId id = 0; id < a.tree().node_count(); ++id) {
    const auto& na = a.tree().node(id);
    const auto& nb = b.tree().node(id);
    CHECK(na.split_dir == nb.split_dir);
    CHECK(na.split_z == nb.split_z);  // J responses never saw the offset
    CHECK(na.agg_i.count == nb.agg_i.count);
    if (na.is_leaf() && na.agg_i.count > 0) {
      const double mean_a = na.agg_i.sum / double(na.agg_i.count);
      const double mean_b = nb.agg_i.sum / double(nb.agg_i.count);
      CHECK(mean_b - mean_a == doctest::Approx(77.0).epsilon(1e-9));
    }
  }
}

TEST_CASE("a tiny warmup degrades to stage-2-only growth") {
  SearchConfig cfg;
  cfg.budget = 200;
  cfg.stage1_budget = 4;  // far below the schedule: no stage-1 splits
  cfg.seed = 3;
  RegularTreeSearch search(make_objective("rastrigin", 2), NoiseSpec::gaussian(1.0), cfg);
  const RunResult r = search.run();
  CHECK(r.total_sims >= 200);
  CHECK(r.leaf_count >= 1);
}
