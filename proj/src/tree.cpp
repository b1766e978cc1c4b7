#include "rts/tree.hpp"

#include <algorithm>
#include <deque>
#include <ostream>
#include <stdexcept>
#include <utility>

namespace rts {

TreeNode::TreeNode(NodeId id_, NodeId parent_, int depth_, Hyperrectangle region_)
    : id(id_), parent(parent_), depth(depth_), region(std::move(region_)) {}

Tree::Tree(int dim) : dim_(dim) {
  nodes_.emplace_back(0, kNoNode, 0, Hyperrectangle::unit(dim));
}

const TreeNode& Tree::node(NodeId id) const {
  if (id >= nodes_.size()) throw std::out_of_range("tree: unknown node id");
  return nodes_[id];
}

NodeId Tree::locate_leaf(const Point& x_norm) const {
  if (!nodes_[0].region.contains(x_norm))
    throw std::invalid_argument("locate_leaf: point outside the unit cube");
  NodeId id = 0;
  while (!nodes_[id].is_leaf()) {
    const TreeNode& n = nodes_[id];
    id = x_norm[n.split_dir] <= n.split_z ? n.left : n.right;
  }
  return id;
}

void Tree::add_observation(SampleStore& store, NodeId leaf, Point x,
                           double response, Cohort cohort) {
  if (leaf >= nodes_.size()) throw std::out_of_range("add_observation: unknown node");
  TreeNode& n = nodes_[leaf];
  if (!n.is_leaf()) throw std::logic_error("add_observation: node is not a leaf");
  store.add_sample(leaf, n.region, std::move(x), response, cohort);
  if (cohort == Cohort::kI) {
    n.agg_i.count += 1;
    n.agg_i.sum += response;
  } else {
    n.agg_j += 1;
  }
  refresh_ancestors(n.parent);
}

void Tree::rebuild_from_store(NodeId id, const SampleStore& store) {
  TreeNode& n = nodes_[id];
  const auto& i_list = store.ids(id, Cohort::kI);
  double sum = 0.0;
  for (const auto sid : i_list) sum += store.sample(sid).response;
  n.agg_i.count = static_cast<long>(i_list.size());
  n.agg_i.sum = sum;
  n.agg_j = static_cast<long>(store.count(id, Cohort::kJ));
}

void Tree::refresh_ancestors(NodeId id) {
  // Internal aggregates are defined as the sum of the two child caches, which
  // keeps them exactly reproducible bottom-up.
  while (id != kNoNode) {
    TreeNode& a = nodes_[id];
    const TreeNode& l = nodes_[a.left];
    const TreeNode& r = nodes_[a.right];
    a.agg_i.count = l.agg_i.count + r.agg_i.count;
    a.agg_i.sum = l.agg_i.sum + r.agg_i.sum;
    a.agg_j = l.agg_j + r.agg_j;
    id = a.parent;
  }
}

std::pair<NodeId, NodeId> Tree::apply_split(SampleStore& store, NodeId leaf,
                                            const SplitDecision& d) {
  if (leaf >= nodes_.size()) throw std::out_of_range("apply_split: unknown node");
  if (!nodes_[leaf].is_leaf()) throw std::logic_error("apply_split: node is not a leaf");
  if (d.dir < 0 || d.dir >= dim_)
    throw std::invalid_argument("apply_split: direction out of range");

  auto rects = split_rect(nodes_[leaf].region, d.dir, d.z);  // validates the cut
  const NodeId lid = static_cast<NodeId>(nodes_.size());
  const NodeId rid = lid + 1;
  const int child_depth = nodes_[leaf].depth + 1;
  nodes_.emplace_back(lid, leaf, child_depth, std::move(rects.first));
  nodes_.emplace_back(rid, leaf, child_depth, std::move(rects.second));

  TreeNode& parent = nodes_[leaf];
  parent.left = lid;
  parent.right = rid;
  parent.split_dir = d.dir;
  parent.split_z = d.z;

  store.reassign_on_split(leaf, lid, rid, d.dir, d.z);
  rebuild_from_store(lid, store);
  rebuild_from_store(rid, store);
  refresh_ancestors(leaf);
  leaf_count_ += 1;
  return {lid, rid};
}

std::vector<NodeId> Tree::leaf_ids() const {
  std::vector<NodeId> out;
  out.reserve(leaf_count_);
  for (const auto& n : nodes_)
    if (n.is_leaf()) out.push_back(n.id);
  return out;
}

int Tree::max_leaf_depth() const {
  int d = 0;
  for (const auto& n : nodes_)
    if (n.is_leaf()) d = std::max(d, n.depth);
  return d;
}

int Tree::min_leaf_depth() const {
  int d = nodes_[0].depth;
  bool first = true;
  for (const auto& n : nodes_) {
    if (!n.is_leaf()) continue;
    d = first ? n.depth : std::min(d, n.depth);
    first = false;
  }
  return d;
}

std::vector<std::pair<int, double>> Tree::depth_diam_profile() const {
  std::vector<std::pair<int, double>> out;
  out.reserve(leaf_count_);
  for (const auto& n : nodes_)
    if (n.is_leaf()) out.emplace_back(n.depth, n.region.diameter());
  return out;
}

long grow_stage1(Tree& tree, SampleStore& store, const SplitParams& params,
                 RngStream& rng) {
  params.validate();
  long deferred = 0;
  std::deque<NodeId> pending{tree.root()};
  while (!pending.empty()) {
    const NodeId id = pending.front();
    pending.pop_front();
    // Copies: apply_split reallocates the node arena.
    const int depth = tree.node(id).depth;
    const Hyperrectangle region = tree.node(id).region;
    if (static_cast<long>(store.count(id, Cohort::kI)) < params.balance(depth))
      continue;  // stage 1 adds no samples, so this leaf is final
    const auto i_view = i_point_view(store, id);
    const auto j_view = j_sample_view(store, id);
    const auto decision = find_split(region, depth, i_view, j_view, params, rng);
    if (!decision) {
      ++deferred;
      continue;
    }
    const auto [l, r] = tree.apply_split(store, id, *decision);
    pending.push_back(l);
    pending.push_back(r);
  }
  return deferred;
}

std::vector<const Point*> i_point_view(const SampleStore& store, NodeId node) {
  const auto& list = store.ids(node, Cohort::kI);
  std::vector<const Point*> out;
  out.reserve(list.size());
  for (const auto id : list) out.push_back(&store.sample(id).x);
  return out;
}

std::vector<JSample> j_sample_view(const SampleStore& store, NodeId node) {
  const auto& list = store.ids(node, Cohort::kJ);
  std::vector<JSample> out;
  out.reserve(list.size());
  for (const auto id : list) {
    const Sample& s = store.sample(id);
    out.push_back(JSample{&s.x, s.response});
  }
  return out;
}

static void dump_node(std::ostream& os, const Tree& tree, const SampleStore& store,
                      NodeId id, int indent) {
  const TreeNode& n = tree.node(id);
  for (int k = 0; k < indent; ++k) os << "  ";
  os << "node " << n.id << " depth " << n.depth << " [";
  for (int j = 0; j < tree.dim(); ++j) {
    if (j) os << " x ";
    os << n.region.lower[j] << "," << n.region.upper[j];
  }
  os << "] nI=" << store.count(id, Cohort::kI)
     << " nJ=" << store.count(id, Cohort::kJ);
  if (n.is_leaf()) {
    os << " leaf\n";
    return;
  }
  os << " split dir=" << n.split_dir << " z=" << n.split_z << "\n";
  dump_node(os, tree, store, n.left, indent + 1);
  dump_node(os, tree, store, n.right, indent + 1);
}

void dump_tree(std::ostream& os, const Tree& tree, const SampleStore& store) {
  dump_node(os, tree, store, tree.root(), 0);
}

void dump_samples(std::ostream& os, const Tree& tree, const SampleStore& store) {
  std::vector<NodeId> owner(store.size(), kNoNode);
  for (const NodeId leaf : tree.leaf_ids()) {
    for (const auto id : store.ids(leaf, Cohort::kI)) owner[id] = leaf;
    for (const auto id : store.ids(leaf, Cohort::kJ)) owner[id] = leaf;
  }
  os << "id,cohort";
  for (int j = 0; j < tree.dim(); ++j) os << ",x" << j;
  os << ",response,node_id\n";
  for (std::size_t id = 0; id < store.size(); ++id) {
    const Sample& s = store.sample(id);
    os << id << "," << (s.cohort == Cohort::kI ? "I" : "J");
    for (const double v : s.x) os << "," << v;
    os << "," << s.response << "," << owner[id] << "\n";
  }
}

}  // namespace rts
