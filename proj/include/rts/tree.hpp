#pragma once

#include <iosfwd>
#include <utility>
#include <vector>

#include "rts/geometry.hpp"
#include "rts/samples.hpp"
#include "rts/splitter.hpp"

namespace rts {

struct AggI {
  long count = 0;
  double sum = 0.0;
};

struct TreeNode {
  TreeNode(NodeId id, NodeId parent, int depth, Hyperrectangle region);

  NodeId id;
  NodeId parent;               // kNoNode at the root
  NodeId left = kNoNode;
  NodeId right = kNoNode;
  int depth;
  Hyperrectangle region;       // normalized units
  int split_dir = -1;
  double split_z = 0.0;
  AggI agg_i;                  // subtree I-count and response sum
  long agg_j = 0;              // subtree J-count

  bool is_leaf() const { return left == kNoNode; }
};

// Arena-allocated partition of the unit cube. Internal aggregates are kept as
// the exact sum of the two child aggregates, so a bottom-up recomputation
// reproduces every cached value bit for bit.
class Tree {
 public:
  explicit Tree(int dim);

  int dim() const { return dim_; }
  NodeId root() const { return 0; }
  std::size_t node_count() const { return nodes_.size(); }
  const TreeNode& node(NodeId id) const;

  NodeId locate_leaf(const Point& x_norm) const;  // boundary ties go left

  // Records one observation at a leaf: store append plus aggregate refresh
  // along the ancestor path.
  void add_observation(SampleStore& store, NodeId leaf, Point x,
                       double response, Cohort cohort);

  // Splits a leaf by an admissible decision: creates the two children,
  // reassigns the leaf's samples and rebuilds aggregates bottom-up.
  std::pair<NodeId, NodeId> apply_split(SampleStore& store, NodeId leaf,
                                        const SplitDecision& d);

  std::vector<NodeId> leaf_ids() const;  // ascending
  std::size_t leaf_count() const { return leaf_count_; }
  int max_leaf_depth() const;
  int min_leaf_depth() const;
  std::vector<std::pair<int, double>> depth_diam_profile() const;  // per leaf

 private:
  void rebuild_from_store(NodeId id, const SampleStore& store);
  void refresh_ancestors(NodeId id);

  int dim_;
  std::vector<TreeNode> nodes_;
  std::size_t leaf_count_ = 1;
};

// Stage-1 growth: keeps splitting any leaf whose I-count reached the balance
// schedule until every leaf sits strictly below it or has no admissible cut.
// Returns the number of deferred (infeasible) split attempts.
long grow_stage1(Tree& tree, SampleStore& store, const SplitParams& params,
                 RngStream& rng);

// Splitter input views over one node's samples.
std::vector<const Point*> i_point_view(const SampleStore& store, NodeId node);
std::vector<JSample> j_sample_view(const SampleStore& store, NodeId node);

// Debug dumps: indented node listing / per-sample CSV.
void dump_tree(std::ostream& os, const Tree& tree, const SampleStore& store);
void dump_samples(std::ostream& os, const Tree& tree, const SampleStore& store);

}  // namespace rts
