#pragma once

#include <cstdint>
#include <iosfwd>
#include <vector>

#include "rts/geometry.hpp"

namespace rts {

using NodeId = std::uint32_t;
inline constexpr NodeId kNoNode = static_cast<NodeId>(-1);

// Dual-cohort bookkeeping: J responses place splits, I responses are the only
// ones that enter estimates and selection. A sample never changes cohort.
enum class Cohort : std::uint8_t { kI, kJ };

struct Sample {
  Point x;           // normalized coordinates
  double response;   // internal (maximization) units
  Cohort cohort;
};

// Append-only response log plus a per-node index of sample ids. One sample is
// one simulator call, so size() doubles as the total-sims counter.
class SampleStore {
 public:
  using Id = std::uint32_t;

  // Validates that x lies in `region` (the caller passes the node's region).
  Id add_sample(NodeId node, const Hyperrectangle& region, Point x,
                double response, Cohort cohort);

  // Moves the parent's samples onto the children of a split at (dir, z),
  // x[dir] <= z going left. Relative insertion order is preserved.
  // Returns {left I-count, right I-count}.
  std::pair<std::size_t, std::size_t> reassign_on_split(NodeId parent, NodeId left,
                                                        NodeId right, int dir, double z);

  std::size_t size() const { return samples_.size(); }
  const Sample& sample(Id id) const { return samples_[id]; }

  std::size_t count(NodeId node, Cohort c) const;
  const std::vector<Id>& ids(NodeId node, Cohort c) const;
  double leaf_mean_i(NodeId node) const;  // throws when the node has no I-samples

 private:
  struct NodeIndex {
    std::vector<Id> i_ids;
    std::vector<Id> j_ids;
  };

  void ensure_node(NodeId node);

  std::vector<Sample> samples_;
  std::vector<NodeIndex> nodes_;
};

}  // namespace rts
