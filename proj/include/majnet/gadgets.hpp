#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "majnet/dynamics.hpp"
#include "majnet/network.hpp"

namespace majnet {

// Ordered node pair encoding one Boolean signal: (1,0) reads as true,
// (0,1) as false; a pair whose nodes agree is invalid.
struct DualPair {
  NodeId true_rail = 0;
  NodeId false_rail = 0;

  friend bool operator==(const DualPair&, const DualPair&) = default;
};

enum class PairValue { kTrue, kFalse, kInvalid };

PairValue pair_value(const Labelling& f, const DualPair& p);

// The distinguished constant-provider pair, held at (1,0).
struct BasePairHandle {
  DualPair pair;
};

enum class NodeRole : std::uint8_t {
  kBaseRail,
  kPairRail,
  kFuseIntermediate,
  kFuseRail,
  kValveP,
  kValveQ,
  kAlarm,
};

// Incremental constructor for gadget networks. Fresh nodes always receive
// a role; emitted networks pass full SocialNetwork validation and carry
// the role annotations.
class NetworkBuilder {
 public:
  NodeId add_node(NodeRole role);
  void add_edge(NodeId from, NodeId to);

  NodeId node_count() const { return static_cast<NodeId>(roles_.size()); }
  NodeRole role(NodeId id) const;

  // Two fresh source nodes registered as the unique base pair.
  // Throws if a base pair already exists.
  BasePairHandle add_base_pair();
  bool has_base_pair() const { return base_.has_value(); }
  BasePairHandle base_pair() const;

  // Two fresh unconnected nodes registered as a dual pair (used for
  // circuit inputs and standalone fixtures).
  DualPair add_pair();

  // Output copies the input one step later (each rail has one influencer).
  DualPair add_nop(DualPair input);
  // Rails crossed: output represents the negation one step later.
  DualPair add_not(DualPair input);
  // Majority gadgets; with the base pair valid at (1,0) and both inputs
  // valid at time t, the output at t+1 is valid and represents the
  // conjunction / disjunction.
  DualPair add_and(DualPair a, DualPair b, const BasePairHandle& base);
  DualPair add_or(DualPair a, DualPair b, const BasePairHandle& base);

  const std::vector<DualPair>& dual_pairs() const { return dual_pairs_; }

  // Direct access for the reduction builders (fuse line, valve, alarm).
  Annotations& annotations() { return annotations_; }

  SocialNetwork build() const;

 private:
  void check_node(NodeId id, const char* what) const;
  void check_pair(const DualPair& p, const char* what) const;
  DualPair add_registered_pair();

  std::vector<NodeRole> roles_;
  std::vector<Edge> edges_;
  std::vector<DualPair> dual_pairs_;
  std::optional<BasePairHandle> base_;
  Annotations annotations_;
};

}  // namespace majnet
