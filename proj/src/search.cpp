#include "rts/search.hpp"

#include <cmath>
#include <stdexcept>
#include <utility>

namespace rts {

void SearchConfig::validate() const {
  if (stage1_budget < 1)
    throw std::invalid_argument("search config: stage-1 budget must be >= 1");
  if (budget <= stage1_budget)
    throw std::invalid_argument("search config: budget must exceed the stage-1 budget");
  if (!(cp >= 0.0))
    throw std::invalid_argument("search config: cp must be >= 0");
  if (!std::isfinite(i_response_offset))
    throw std::invalid_argument("search config: offset must be finite");
  split.validate();
}

double ucb_value(double mean, long n_parent, long n_child, double cp) {
  return mean + cp * std::sqrt(2.0 * std::log(static_cast<double>(n_parent)) /
                               static_cast<double>(n_child));
}

NodeId uct_select(const Tree& tree, double cp) {
  NodeId id = tree.root();
  while (!tree.node(id).is_leaf()) {
    const TreeNode& n = tree.node(id);
    const TreeNode& l = tree.node(n.left);
    const TreeNode& r = tree.node(n.right);
    if (l.agg_i.count < 1 || r.agg_i.count < 1)
      throw std::logic_error("uct_select: child subtree without I-samples");
    const double ucb_l = ucb_value(l.agg_i.sum / static_cast<double>(l.agg_i.count),
                                   n.agg_i.count, l.agg_i.count, cp);
    const double ucb_r = ucb_value(r.agg_i.sum / static_cast<double>(r.agg_i.count),
                                   n.agg_i.count, r.agg_i.count, cp);
    id = ucb_r > ucb_l ? n.right : n.left;  // ties descend left
  }
  return id;
}

RegularTreeSearch::RegularTreeSearch(Objective objective, NoiseSpec noise,
                                     SearchConfig cfg)
    : objective_(std::move(objective)),
      noise_(noise),
      cfg_(cfg),
      rng_(cfg.seed),
      tree_(objective_.dim()) {
  cfg_.validate();
}

RunResult RegularTreeSearch::run() {
  if (ran_) throw std::logic_error("run: a replication runs once");
  ran_ = true;

  // Stage 1: uniform warmup at the root, first half I, rest J.
  const long n0 = cfg_.stage1_budget;
  const long n_i = n0 / 2;
  const Hyperrectangle& root_region = tree_.node(tree_.root()).region;
  for (long i = 0; i < n0; ++i) {
    Point x = uniform_sample(root_region, rng_);
    double y = objective_.simulate(x, noise_, rng_);
    const Cohort cohort = i < n_i ? Cohort::kI : Cohort::kJ;
    if (cohort == Cohort::kI) y += cfg_.i_response_offset;
    tree_.add_observation(store_, tree_.root(), std::move(x), y, cohort);
  }
  deferred_ += grow_stage1(tree_, store_, cfg_.split, rng_);

  // Stage 2: adaptive sampling until the budget is spent.
  long n = n0;
  while (n < cfg_.budget) {
    const NodeId leaf = uct_select(tree_, cfg_.cp);
    const int depth = tree_.node(leaf).depth;
    const Hyperrectangle region = tree_.node(leaf).region;  // apply_split reallocates

    Point x = uniform_sample(region, rng_);
    const double y = objective_.simulate(x, noise_, rng_) + cfg_.i_response_offset;
    tree_.add_observation(store_, leaf, std::move(x), y, Cohort::kI);

    const long threshold = cfg_.split.balance(depth);
    if (static_cast<long>(store_.count(leaf, Cohort::kI)) >= threshold) {
      // Top the J-cohort up to the same schedule; each point costs budget.
      const long have_j = static_cast<long>(store_.count(leaf, Cohort::kJ));
      const long topup = threshold > have_j ? threshold - have_j : 0;
      for (long k = 0; k < topup; ++k) {
        Point xj = uniform_sample(region, rng_);
        const double yj = objective_.simulate(xj, noise_, rng_);
        tree_.add_observation(store_, leaf, std::move(xj), yj, Cohort::kJ);
      }
      n += topup;

      const auto i_view = i_point_view(store_, leaf);
      const auto j_view = j_sample_view(store_, leaf);
      const auto decision =
          find_split(region, depth, i_view, j_view, cfg_.split, rng_);
      if (decision)
        tree_.apply_split(store_, leaf, *decision);
      else
        ++deferred_;  // retried on the leaf's next insertion
    }
    n += 1;
  }
  return extract();
}

RunResult RegularTreeSearch::extract() const {
  NodeId best = kNoNode;
  double best_mean = 0.0;
  for (const NodeId id : tree_.leaf_ids()) {
    if (store_.count(id, Cohort::kI) == 0) continue;
    const double m = store_.leaf_mean_i(id);
    if (best == kNoNode || m > best_mean) {  // ties keep the smaller id
      best = id;
      best_mean = m;
    }
  }
  if (best == kNoNode)
    throw std::logic_error("extract: no leaf holds I-samples");

  const TreeNode& leaf = tree_.node(best);
  const Point mid_user = objective_.to_user(leaf.region.midpoint());
  const bool minimizing = objective_.spec().sense == Sense::kMinimize;
  return RunResult{
      Hyperrectangle(objective_.to_user(leaf.region.lower),
                     objective_.to_user(leaf.region.upper)),
      mid_user,
      minimizing ? -best_mean : best_mean,
      objective_.eval_true(mid_user),
      static_cast<long>(store_.size()),
      static_cast<long>(tree_.leaf_count()),
      tree_.max_leaf_depth(),
      tree_.min_leaf_depth(),
      deferred_};
}

RunResult run_search(const Objective& objective, const NoiseSpec& noise,
                     const SearchConfig& cfg) {
  return RegularTreeSearch(objective, noise, cfg).run();
}

}  // namespace rts
