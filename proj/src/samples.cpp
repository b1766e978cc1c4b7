#include "rts/samples.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace rts {

SampleStore::Id SampleStore::add_sample(NodeId node, const Hyperrectangle& region,
                                        Point x, double response, Cohort cohort) {
  if (static_cast<int>(x.size()) != region.dim())
    throw std::invalid_argument("add_sample: dimension mismatch");
  if (!region.contains(x))
    throw std::invalid_argument("add_sample: point outside the node region");
  ensure_node(node);
  const Id id = static_cast<Id>(samples_.size());
  samples_.push_back(Sample{std::move(x), response, cohort});
  auto& idx = nodes_[node];
  (cohort == Cohort::kI ? idx.i_ids : idx.j_ids).push_back(id);
  return id;
}

void SampleStore::ensure_node(NodeId node) {
  if (node == kNoNode) throw std::invalid_argument("sample store: invalid node id");
  if (node >= nodes_.size()) nodes_.resize(node + 1);
}

std::pair<std::size_t, std::size_t> SampleStore::reassign_on_split(
    NodeId parent, NodeId left, NodeId right, int dir, double z) {
  ensure_node(std::max({parent, left, right}));
  auto& p = nodes_[parent];
  auto& l = nodes_[left];
  auto& r = nodes_[right];
  if (!l.i_ids.empty() || !l.j_ids.empty() || !r.i_ids.empty() || !r.j_ids.empty())
    throw std::logic_error("reassign_on_split: children already hold samples");

  auto route = [&](std::vector<Id>& src, std::vector<Id>& to_l, std::vector<Id>& to_r) {
    for (const Id id : src)
      (samples_[id].x[dir] <= z ? to_l : to_r).push_back(id);
    src.clear();
    src.shrink_to_fit();
  };
  route(p.i_ids, l.i_ids, r.i_ids);
  route(p.j_ids, l.j_ids, r.j_ids);
  return {l.i_ids.size(), r.i_ids.size()};
}

std::size_t SampleStore::count(NodeId node, Cohort c) const {
  return ids(node, c).size();
}

const std::vector<SampleStore::Id>& SampleStore::ids(NodeId node, Cohort c) const {
  static const std::vector<Id> kEmpty;
  if (node == kNoNode || node >= nodes_.size()) return kEmpty;
  return c == Cohort::kI ? nodes_[node].i_ids : nodes_[node].j_ids;
}

double SampleStore::leaf_mean_i(NodeId node) const {
  const auto& list = ids(node, Cohort::kI);
  if (list.empty())
    throw std::logic_error("leaf_mean_i: node holds no I-samples");
  double sum = 0.0;
  for (const Id id : list) sum += samples_[id].response;
  return sum / static_cast<double>(list.size());
}

}  // namespace rts
