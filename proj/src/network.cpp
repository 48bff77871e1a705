#include "majnet/network.hpp"

#include <algorithm>
#include <set>

#include "majnet/error.hpp"

namespace majnet {

namespace {

void check_pair_in_range(const NodePair& p, NodeId n, const char* role) {
  if (p.first >= n || p.second >= n) {
    fail_validation(std::string("annotation node out of range in ") + role);
  }
}

void validate_annotations(const Annotations& a, NodeId n) {
  std::set<NodeId> seen;
  auto claim = [&](NodeId id, const char* role) {
    if (!seen.insert(id).second) {
      fail_validation(std::string("annotation role sets overlap at node ") +
                      std::to_string(id) + " (" + role + ")");
    }
  };
  for (const auto& p : a.dual_pairs) {
    check_pair_in_range(p, n, "dual_pairs");
    claim(p.first, "dual_pairs");
    claim(p.second, "dual_pairs");
  }
  if (a.base_pair) {
    check_pair_in_range(*a.base_pair, n, "base_pair");
    claim(a.base_pair->first, "base_pair");
    claim(a.base_pair->second, "base_pair");
  }
  for (const auto& p : a.fuse_pairs) {
    check_pair_in_range(p, n, "fuse_pairs");
    claim(p.first, "fuse_pairs");
    claim(p.second, "fuse_pairs");
  }
  if (a.valve_p) {
    check_pair_in_range(*a.valve_p, n, "valve P");
    claim(a.valve_p->first, "valve P");
    claim(a.valve_p->second, "valve P");
  }
  if (a.valve_q) {
    check_pair_in_range(*a.valve_q, n, "valve Q");
    claim(a.valve_q->first, "valve Q");
    claim(a.valve_q->second, "valve Q");
  }
  for (NodeId id : a.alarm) {
    if (id >= n) fail_validation("annotation node out of range in alarm");
    claim(id, "alarm");
  }
}

}  // namespace

SocialNetwork SocialNetwork::build(NodeId n, std::vector<Edge> edges,
                                   Annotations annotations) {
  for (const auto& [u, v] : edges) {
    if (u >= n || v >= n) {
      fail_validation("edge endpoint out of range: (" + std::to_string(u) +
                      "," + std::to_string(v) + ") with n=" +
                      std::to_string(n));
    }
    if (u == v) {
      fail_validation("self-loop on node " + std::to_string(u) +
                      " violates irreflexivity");
    }
  }
  std::sort(edges.begin(), edges.end());
  auto dup = std::adjacent_find(edges.begin(), edges.end());
  if (dup != edges.end()) {
    fail_validation("duplicate edge (" + std::to_string(dup->first) + "," +
                    std::to_string(dup->second) + ")");
  }
  validate_annotations(annotations, n);

  SocialNetwork net;
  net.n_ = n;
  net.edges_ = std::move(edges);
  net.annotations_ = std::move(annotations);

  std::vector<std::uint32_t> in_deg(n, 0), out_deg(n, 0);
  for (const auto& [u, v] : net.edges_) {
    ++out_deg[u];
    ++in_deg[v];
  }
  net.in_offsets_.assign(n + 1, 0);
  net.out_offsets_.assign(n + 1, 0);
  for (NodeId i = 0; i < n; ++i) {
    net.in_offsets_[i + 1] = net.in_offsets_[i] + in_deg[i];
    net.out_offsets_[i + 1] = net.out_offsets_[i] + out_deg[i];
  }
  net.in_adj_.resize(net.edges_.size());
  net.out_adj_.resize(net.edges_.size());
  std::vector<std::uint32_t> in_pos(net.in_offsets_.begin(),
                                    net.in_offsets_.end() - 1);
  std::vector<std::uint32_t> out_pos(net.out_offsets_.begin(),
                                     net.out_offsets_.end() - 1);
  // edges_ is sorted by (u, v), so out_adj_ comes out ascending; in_adj_
  // is filled in ascending u order per target, hence also sorted.
  for (const auto& [u, v] : net.edges_) {
    net.out_adj_[out_pos[u]++] = v;
    net.in_adj_[in_pos[v]++] = u;
  }
  return net;
}

std::span<const NodeId> SocialNetwork::influencers(NodeId i) const {
  if (i >= n_) {
    fail_validation("node " + std::to_string(i) + " out of range (n=" +
                    std::to_string(n_) + ")");
  }
  return {in_adj_.data() + in_offsets_[i], in_offsets_[i + 1] - in_offsets_[i]};
}

std::span<const NodeId> SocialNetwork::influenced(NodeId i) const {
  if (i >= n_) {
    fail_validation("node " + std::to_string(i) + " out of range (n=" +
                    std::to_string(n_) + ")");
  }
  return {out_adj_.data() + out_offsets_[i],
          out_offsets_[i + 1] - out_offsets_[i]};
}

namespace {

// Kahn topological order; empty result & flag when a cycle exists.
struct TopoResult {
  bool acyclic = false;
  std::vector<NodeId> order;
};

TopoResult topo_sort(const SocialNetwork& net) {
  const NodeId n = net.node_count();
  std::vector<std::uint32_t> remaining(n);
  std::vector<NodeId> queue;
  for (NodeId i = 0; i < n; ++i) {
    remaining[i] = net.in_degree(i);
    if (remaining[i] == 0) queue.push_back(i);
  }
  TopoResult result;
  result.order.reserve(n);
  for (std::size_t head = 0; head < queue.size(); ++head) {
    NodeId u = queue[head];
    result.order.push_back(u);
    for (NodeId v : net.influenced(u)) {
      if (--remaining[v] == 0) queue.push_back(v);
    }
  }
  result.acyclic = result.order.size() == n;
  return result;
}

}  // namespace

bool is_dag(const SocialNetwork& net) { return topo_sort(net).acyclic; }

std::uint32_t longest_path(const SocialNetwork& net) {
  TopoResult topo = topo_sort(net);
  if (!topo.acyclic) {
    fail_validation("longest_path requires an acyclic network");
  }
  std::uint32_t best = 0;
  std::vector<std::uint32_t> level(net.node_count(), 0);
  for (NodeId u : topo.order) {
    best = std::max(best, level[u]);
    for (NodeId v : net.influenced(u)) {
      level[v] = std::max(level[v], level[u] + 1);
    }
  }
  return best;
}

SccDecomposition scc_decomposition(const SocialNetwork& net) {
  const NodeId n = net.node_count();
  // Iterative Tarjan.
  constexpr std::uint32_t kUnvisited = 0xffffffffu;
  std::vector<std::uint32_t> index(n, kUnvisited), lowlink(n, 0);
  std::vector<bool> on_stack(n, false);
  std::vector<NodeId> stack;
  std::vector<std::uint32_t> raw_comp(n, kUnvisited);
  std::uint32_t next_index = 0, comp_count = 0;

  struct Frame {
    NodeId node;
    std::size_t next_child;
  };
  std::vector<Frame> frames;

  for (NodeId root = 0; root < n; ++root) {
    if (index[root] != kUnvisited) continue;
    frames.push_back({root, 0});
    index[root] = lowlink[root] = next_index++;
    stack.push_back(root);
    on_stack[root] = true;
    while (!frames.empty()) {
      Frame& f = frames.back();
      auto children = net.influenced(f.node);
      if (f.next_child < children.size()) {
        NodeId w = children[f.next_child++];
        if (index[w] == kUnvisited) {
          index[w] = lowlink[w] = next_index++;
          stack.push_back(w);
          on_stack[w] = true;
          frames.push_back({w, 0});
        } else if (on_stack[w]) {
          lowlink[f.node] = std::min(lowlink[f.node], index[w]);
        }
      } else {
        NodeId v = f.node;
        if (lowlink[v] == index[v]) {
          while (true) {
            NodeId w = stack.back();
            stack.pop_back();
            on_stack[w] = false;
            raw_comp[w] = comp_count;
            if (w == v) break;
          }
          ++comp_count;
        }
        frames.pop_back();
        if (!frames.empty()) {
          NodeId parent = frames.back().node;
          lowlink[parent] = std::min(lowlink[parent], lowlink[v]);
        }
      }
    }
  }

  // Tarjan emits components in reverse topological order; flip the ids so
  // condensation edges always go from lower to higher component.
  SccDecomposition scc;
  scc.count = comp_count;
  scc.membership.resize(n);
  for (NodeId i = 0; i < n; ++i) {
    scc.membership[i] = comp_count - 1 - raw_comp[i];
  }
  std::set<Edge> cond;
  for (const auto& [u, v] : net.edges()) {
    std::uint32_t cu = scc.membership[u], cv = scc.membership[v];
    if (cu != cv) cond.insert({cu, cv});
  }
  scc.condensation_edges.assign(cond.begin(), cond.end());
  return scc;
}

InducedSubnetwork induced_subnetwork(const SocialNetwork& net,
                                     std::vector<NodeId> nodes) {
  std::sort(nodes.begin(), nodes.end());
  nodes.erase(std::unique(nodes.begin(), nodes.end()), nodes.end());
  for (NodeId id : nodes) {
    if (id >= net.node_count()) {
      fail_validation("induced_subnetwork: node " + std::to_string(id) +
                      " out of range");
    }
  }
  constexpr std::uint32_t kAbsent = 0xffffffffu;
  std::vector<std::uint32_t> remap(net.node_count(), kAbsent);
  for (std::size_t k = 0; k < nodes.size(); ++k) remap[nodes[k]] = k;
  std::vector<Edge> edges;
  for (const auto& [u, v] : net.edges()) {
    if (remap[u] != kAbsent && remap[v] != kAbsent) {
      edges.push_back({remap[u], remap[v]});
    }
  }
  InducedSubnetwork result{
      SocialNetwork::build(static_cast<NodeId>(nodes.size()),
                           std::move(edges)),
      std::move(nodes)};
  return result;
}

bool is_clique(const SocialNetwork& net) {
  const std::uint64_t n = net.node_count();
  return net.edge_count() == n * (n - 1) && n > 0;
}

StructureReport analyze(const SocialNetwork& net) {
  StructureReport report;
  report.is_dag = is_dag(net);
  if (report.is_dag) report.longest_path = longest_path(net);
  SccDecomposition scc = scc_decomposition(net);
  report.scc_count = scc.count;
  report.scc_membership = std::move(scc.membership);
  report.is_clique = is_clique(net);
  if (report.is_clique) {
    report.parity = net.node_count() % 2 == 1 ? Parity::kOdd : Parity::kEven;
  }
  for (NodeId i = 0; i < net.node_count(); ++i) {
    report.max_in_degree = std::max(report.max_in_degree, net.in_degree(i));
  }
  return report;
}

ConvergencePrediction predict_convergence(const StructureReport& report) {
  ConvergencePrediction prediction;
  if (report.is_dag) {
    prediction.kind = ConvergencePrediction::Kind::kAlwaysConverges;
    prediction.bound = report.longest_path;
    return prediction;
  }
  if (report.is_clique) {
    if (report.parity == Parity::kOdd) {
      prediction.kind = ConvergencePrediction::Kind::kAlwaysConverges;
      prediction.bound = 1;
    } else {
      prediction.kind = ConvergencePrediction::Kind::kNotAlwaysConverges;
      prediction.witness_hint = "any evenly split labelling";
    }
    return prediction;
  }
  prediction.kind = ConvergencePrediction::Kind::kUnknown;
  return prediction;
}

}  // namespace majnet
