#include "majnet/gadgets.hpp"

#include "majnet/error.hpp"

namespace majnet {

PairValue pair_value(const Labelling& f, const DualPair& p) {
  bool t = f.get(p.true_rail), fl = f.get(p.false_rail);
  if (t == fl) return PairValue::kInvalid;
  return t ? PairValue::kTrue : PairValue::kFalse;
}

NodeId NetworkBuilder::add_node(NodeRole role) {
  roles_.push_back(role);
  return static_cast<NodeId>(roles_.size() - 1);
}

void NetworkBuilder::add_edge(NodeId from, NodeId to) {
  check_node(from, "add_edge");
  check_node(to, "add_edge");
  edges_.push_back({from, to});
}

NodeRole NetworkBuilder::role(NodeId id) const {
  check_node(id, "role");
  return roles_[id];
}

void NetworkBuilder::check_node(NodeId id, const char* what) const {
  if (id >= roles_.size()) {
    fail_validation(std::string(what) + ": dangling node id " +
                    std::to_string(id));
  }
}

void NetworkBuilder::check_pair(const DualPair& p, const char* what) const {
  check_node(p.true_rail, what);
  check_node(p.false_rail, what);
}

BasePairHandle NetworkBuilder::add_base_pair() {
  if (base_) fail_validation("base pair already added");
  NodeId t = add_node(NodeRole::kBaseRail);
  NodeId f = add_node(NodeRole::kBaseRail);
  base_ = BasePairHandle{DualPair{t, f}};
  annotations_.base_pair = NodePair{t, f};
  return *base_;
}

BasePairHandle NetworkBuilder::base_pair() const {
  if (!base_) fail_validation("no base pair in builder");
  return *base_;
}

DualPair NetworkBuilder::add_registered_pair() {
  NodeId t = add_node(NodeRole::kPairRail);
  NodeId f = add_node(NodeRole::kPairRail);
  DualPair p{t, f};
  dual_pairs_.push_back(p);
  annotations_.dual_pairs.push_back(NodePair{t, f});
  return p;
}

DualPair NetworkBuilder::add_pair() { return add_registered_pair(); }

DualPair NetworkBuilder::add_nop(DualPair input) {
  check_pair(input, "add_nop");
  DualPair out = add_registered_pair();
  add_edge(input.true_rail, out.true_rail);
  add_edge(input.false_rail, out.false_rail);
  return out;
}

DualPair NetworkBuilder::add_not(DualPair input) {
  check_pair(input, "add_not");
  DualPair out = add_registered_pair();
  add_edge(input.false_rail, out.true_rail);
  add_edge(input.true_rail, out.false_rail);
  return out;
}

DualPair NetworkBuilder::add_and(DualPair a, DualPair b,
                                 const BasePairHandle& base) {
  check_pair(a, "add_and");
  check_pair(b, "add_and");
  if (!base_ || !(base_->pair == base.pair)) {
    fail_validation("add_and: missing or foreign base pair");
  }
  DualPair out = add_registered_pair();
  // true rail: majority of the input true rails and the constant 0;
  // false rail: majority of the input false rails and the constant 1.
  add_edge(a.true_rail, out.true_rail);
  add_edge(b.true_rail, out.true_rail);
  add_edge(base.pair.false_rail, out.true_rail);
  add_edge(a.false_rail, out.false_rail);
  add_edge(b.false_rail, out.false_rail);
  add_edge(base.pair.true_rail, out.false_rail);
  return out;
}

DualPair NetworkBuilder::add_or(DualPair a, DualPair b,
                                const BasePairHandle& base) {
  check_pair(a, "add_or");
  check_pair(b, "add_or");
  if (!base_ || !(base_->pair == base.pair)) {
    fail_validation("add_or: missing or foreign base pair");
  }
  DualPair out = add_registered_pair();
  add_edge(a.true_rail, out.true_rail);
  add_edge(b.true_rail, out.true_rail);
  add_edge(base.pair.true_rail, out.true_rail);
  add_edge(a.false_rail, out.false_rail);
  add_edge(b.false_rail, out.false_rail);
  add_edge(base.pair.false_rail, out.false_rail);
  return out;
}

SocialNetwork NetworkBuilder::build() const {
  return SocialNetwork::build(node_count(), edges_, annotations_);
}

}  // namespace majnet
