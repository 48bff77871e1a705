#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace majnet {

using NodeId = std::uint32_t;
using Edge = std::pair<NodeId, NodeId>;  // (u, v): u influences v

// Node pair with a distinguished order. For signal-carrying pairs the first
// node is the true rail and the second the false rail; fuse-line pairs and
// the valve reuse the same shape without the signal interpretation.
struct NodePair {
  NodeId first = 0;
  NodeId second = 0;

  friend bool operator==(const NodePair&, const NodePair&) = default;
};

// Optional role metadata attached by the gadget/circuit/reduction builders.
// All ids refer to nodes of the owning network; role sets are disjoint.
struct Annotations {
  std::vector<NodePair> dual_pairs;
  std::optional<NodePair> base_pair;
  std::vector<NodePair> fuse_pairs;
  std::optional<NodePair> valve_p;
  std::optional<NodePair> valve_q;
  std::vector<NodeId> alarm;

  bool empty() const {
    return dual_pairs.empty() && !base_pair && fuse_pairs.empty() &&
           !valve_p && !valve_q && alarm.empty();
  }
};

// Immutable simple irreflexive directed graph over agents 0..n-1.
// Edge (u, v) means u influences v. Construction validates the invariants
// and builds both adjacency indices with deterministic (sorted) ordering,
// so identical inputs always produce identical traversals.
class SocialNetwork {
 public:
  SocialNetwork() = default;  // the empty network

  // Throws Error(kValidation) on self-loops, duplicate edges or
  // out-of-range endpoints.
  static SocialNetwork build(NodeId n, std::vector<Edge> edges,
                             Annotations annotations = {});

  NodeId node_count() const { return n_; }
  std::size_t edge_count() const { return edges_.size(); }
  const std::vector<Edge>& edges() const { return edges_; }
  const Annotations& annotations() const { return annotations_; }

  // E^-1[i]: the influencers of i, ascending. Throws on out-of-range i.
  std::span<const NodeId> influencers(NodeId i) const;
  // E[i]: the agents i influences, ascending. Throws on out-of-range i.
  std::span<const NodeId> influenced(NodeId i) const;

  NodeId in_degree(NodeId i) const {
    return static_cast<NodeId>(influencers(i).size());
  }

 private:
  NodeId n_ = 0;
  std::vector<Edge> edges_;  // sorted lexicographically
  // CSR layout for both directions.
  std::vector<std::uint32_t> in_offsets_, out_offsets_;
  std::vector<NodeId> in_adj_, out_adj_;
  Annotations annotations_;
};

enum class Parity { kEven, kOdd };

// Structural facts established by analyze(); longest_path is present iff
// is_dag, parity iff is_clique.
struct StructureReport {
  bool is_dag = false;
  std::optional<std::uint32_t> longest_path;
  std::uint32_t scc_count = 0;
  std::vector<std::uint32_t> scc_membership;
  bool is_clique = false;
  std::optional<Parity> parity;
  std::uint32_t max_in_degree = 0;
};

struct SccDecomposition {
  std::uint32_t count = 0;
  // node -> component id; components are numbered in topological order of
  // the condensation (every condensation edge goes low -> high).
  std::vector<std::uint32_t> membership;
  std::vector<Edge> condensation_edges;  // deduplicated, sorted
};

bool is_dag(const SocialNetwork& net);

// Maximum edge count over all paths; every node is reachable from some
// source, so this is also the largest node level. Throws kValidation when
// the network has a cycle.
std::uint32_t longest_path(const SocialNetwork& net);

// Tarjan in linear time; never fails.
SccDecomposition scc_decomposition(const SocialNetwork& net);

// Dense re-labelled subgraph induced by `nodes` keeping only internal
// edges; `node_map` lists the original id of each new node (ascending).
struct InducedSubnetwork {
  SocialNetwork network;
  std::vector<NodeId> node_map;
};
InducedSubnetwork induced_subnetwork(const SocialNetwork& net,
                                     std::vector<NodeId> nodes);

// True iff every ordered pair of distinct agents is an edge (edge count
// n*(n-1), which the constructor already deduplicated).
bool is_clique(const SocialNetwork& net);

StructureReport analyze(const SocialNetwork& net);

// What the structural report alone guarantees about convergence.
struct ConvergencePrediction {
  enum class Kind { kAlwaysConverges, kNotAlwaysConverges, kUnknown };
  Kind kind = Kind::kUnknown;
  // kAlwaysConverges: every labelling reaches a fixed point within `bound`.
  std::optional<std::uint32_t> bound;
  // kNotAlwaysConverges: a hint describing a witness family.
  std::string witness_hint;
};

ConvergencePrediction predict_convergence(const StructureReport& report);

}  // namespace majnet
