#include "majnet/reduction.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "majnet/error.hpp"

namespace majnet {

ToyTM ToyTM::build(std::vector<std::string> states, const std::string& initial,
                   const std::vector<std::string>& halting,
                   std::uint32_t tape_len,
                   const std::vector<TransitionRule>& rules) {
  if (states.empty()) fail_validation("machine needs at least one state");
  if (tape_len == 0) fail_validation("tape length must be positive");
  ToyTM tm;
  tm.state_names_ = std::move(states);
  tm.tape_len_ = tape_len;
  std::map<std::string, std::uint32_t> index;
  for (std::uint32_t q = 0; q < tm.state_names_.size(); ++q) {
    if (!index.emplace(tm.state_names_[q], q).second) {
      fail_validation("duplicate state name " + tm.state_names_[q]);
    }
  }
  auto lookup = [&](const std::string& name) {
    auto it = index.find(name);
    if (it == index.end()) fail_validation("unknown state " + name);
    return it->second;
  };
  tm.initial_ = lookup(initial);
  tm.halting_.assign(tm.state_names_.size(), 0);
  for (const std::string& name : halting) tm.halting_[lookup(name)] = 1;
  tm.rules_.assign(tm.state_names_.size() * 2, std::nullopt);
  for (const TransitionRule& rule : rules) {
    std::uint32_t q = lookup(rule.state);
    if (tm.halting_[q]) {
      fail_validation("transition from halting state " + rule.state);
    }
    if (rule.read > 1 || rule.write > 1) {
      fail_validation("alphabet is {0,1}");
    }
    auto& slot = tm.rules_[q * 2 + rule.read];
    if (slot) {
      fail_validation("duplicate transition for (" + rule.state + "," +
                      std::to_string(rule.read) + ")");
    }
    slot = Transition{rule.write, rule.move, lookup(rule.next)};
  }
  for (std::uint32_t q = 0; q < tm.state_names_.size(); ++q) {
    if (tm.halting_[q]) continue;
    for (int b = 0; b < 2; ++b) {
      if (!tm.rules_[q * 2 + b]) {
        fail_validation("missing transition for (" + tm.state_names_[q] + "," +
                        std::to_string(b) + ")");
      }
    }
  }
  return tm;
}

std::uint32_t ToyTM::state_index(const std::string& name) const {
  for (std::uint32_t q = 0; q < state_names_.size(); ++q) {
    if (state_names_[q] == name) return q;
  }
  fail_validation("unknown state " + name);
}

const Transition& ToyTM::transition(std::uint32_t q, std::uint8_t read) const {
  if (q >= state_names_.size() || halting_[q] || read > 1) {
    fail_validation("no transition for this state/read");
  }
  return *rules_[q * 2 + read];
}

namespace {

void check_config(const ToyTM& tm, const TMConfig& config) {
  if (config.state >= tm.state_count() || config.head >= tm.tape_len() ||
      config.tape.size() != tm.tape_len()) {
    fail_validation("malformed configuration");
  }
}

}  // namespace

Bits encode_config(const ToyTM& tm, const TMConfig& config) {
  check_config(tm, config);
  Bits bits(tm.config_bits(), 0);
  bits[config.state] = 1;
  bits[tm.state_count() + config.head] = 1;
  for (std::uint32_t j = 0; j < tm.tape_len(); ++j) {
    bits[tm.state_count() + tm.tape_len() + j] = config.tape[j] ? 1 : 0;
  }
  return bits;
}

std::optional<TMConfig> decode_config(const ToyTM& tm, const Bits& bits) {
  if (bits.size() != tm.config_bits()) {
    fail_validation("encoding length mismatch");
  }
  const std::uint32_t S = tm.state_count(), m = tm.tape_len();
  std::optional<std::uint32_t> state, head;
  for (std::uint32_t q = 0; q < S; ++q) {
    if (!bits[q]) continue;
    if (state) return std::nullopt;
    state = q;
  }
  for (std::uint32_t j = 0; j < m; ++j) {
    if (!bits[S + j]) continue;
    if (head) return std::nullopt;
    head = j;
  }
  if (!state || !head) return std::nullopt;
  TMConfig config{*state, *head, Bits(bits.begin() + S + m, bits.end())};
  return config;
}

std::optional<TMConfig> tm_step(const ToyTM& tm, const TMConfig& config) {
  check_config(tm, config);
  if (tm.is_halting(config.state)) return std::nullopt;
  const Transition& t = tm.transition(config.state, config.tape[config.head]);
  if (t.move == Move::kLeft && config.head == 0) return std::nullopt;
  if (t.move == Move::kRight && config.head + 1 == tm.tape_len()) {
    return std::nullopt;
  }
  TMConfig next = config;
  next.tape[config.head] = t.write;
  next.state = t.next;
  if (t.move == Move::kLeft) {
    --next.head;
  } else if (t.move == Move::kRight) {
    ++next.head;
  }
  return next;
}

namespace {

// Small front end over Circuit for generated logic.
class CircuitBuilder {
 public:
  explicit CircuitBuilder(std::uint32_t inputs) { c_.input_count = inputs; }

  Ref input(std::uint32_t i) { return Ref::input(i); }

  Ref gate(GateOp op, std::vector<Ref> args) {
    c_.gates.push_back(Gate{op, std::move(args)});
    return Ref::gate(static_cast<std::uint32_t>(c_.gates.size() - 1));
  }

  Ref and_(Ref a, Ref b) { return gate(GateOp::kAnd, {a, b}); }
  Ref or_(Ref a, Ref b) { return gate(GateOp::kOr, {a, b}); }
  Ref not_(Ref a) { return gate(GateOp::kNot, {a}); }
  Ref const_false() { return gate(GateOp::kConstFalse, {}); }

  Ref or_tree(const std::vector<Ref>& terms) {
    if (terms.empty()) return const_false();
    std::vector<Ref> level = terms;
    while (level.size() > 1) {
      std::vector<Ref> next;
      for (std::size_t i = 0; i + 1 < level.size(); i += 2) {
        next.push_back(or_(level[i], level[i + 1]));
      }
      if (level.size() % 2 == 1) next.push_back(level.back());
      level = std::move(next);
    }
    return level[0];
  }

  // High iff exactly one of the terms is high.
  Ref exactly_one(const std::vector<Ref>& terms) {
    if (terms.size() == 1) return terms[0];
    std::vector<Ref> pairs;
    for (std::size_t i = 0; i < terms.size(); ++i) {
      for (std::size_t j = i + 1; j < terms.size(); ++j) {
        pairs.push_back(and_(terms[i], terms[j]));
      }
    }
    return and_(or_tree(terms), not_(or_tree(pairs)));
  }

  void output(Ref r) { c_.outputs.push_back(r); }

  Circuit take() {
    c_.validate();
    return std::move(c_);
  }

 private:
  Circuit c_;
};

}  // namespace

Circuit step_circuit(const ToyTM& tm) {
  const std::uint32_t S = tm.state_count(), m = tm.tape_len();
  CircuitBuilder b(tm.config_bits());

  std::vector<Ref> state_in, head_in, tape_in;
  for (std::uint32_t q = 0; q < S; ++q) state_in.push_back(b.input(q));
  for (std::uint32_t j = 0; j < m; ++j) head_in.push_back(b.input(S + j));
  for (std::uint32_t j = 0; j < m; ++j) tape_in.push_back(b.input(S + m + j));

  // Bit under the head.
  std::vector<Ref> head_taps;
  for (std::uint32_t j = 0; j < m; ++j) {
    head_taps.push_back(b.and_(head_in[j], tape_in[j]));
  }
  Ref read = b.or_tree(head_taps);
  Ref not_read = b.not_(read);

  // One firing signal per applicable transition.
  struct Firing {
    Ref signal;
    const Transition* rule;
  };
  std::vector<Firing> firings;
  for (std::uint32_t q = 0; q < S; ++q) {
    if (tm.is_halting(q)) continue;
    for (std::uint8_t rd = 0; rd < 2; ++rd) {
      Ref match = b.and_(state_in[q], rd ? read : not_read);
      firings.push_back({match, &tm.transition(q, rd)});
    }
  }
  auto collect = [&](auto&& predicate) {
    std::vector<Ref> terms;
    for (const Firing& f : firings) {
      if (predicate(*f.rule)) terms.push_back(f.signal);
    }
    return terms;
  };

  std::vector<Ref> halting_states;
  for (std::uint32_t q = 0; q < S; ++q) {
    if (tm.is_halting(q)) halting_states.push_back(state_in[q]);
  }
  Ref halt_state = b.or_tree(halting_states);
  Ref malformed = b.or_(b.not_(b.exactly_one(state_in)),
                        b.not_(b.exactly_one(head_in)));
  Ref move_left = b.or_tree(collect(
      [](const Transition& t) { return t.move == Move::kLeft; }));
  Ref move_right = b.or_tree(collect(
      [](const Transition& t) { return t.move == Move::kRight; }));
  Ref move_stay = b.or_tree(collect(
      [](const Transition& t) { return t.move == Move::kStay; }));
  Ref wall = b.or_(b.and_(move_left, head_in[0]),
                   b.and_(move_right, head_in[m - 1]));
  Ref halt = b.or_(b.or_(halt_state, malformed), wall);

  // Successor state bits.
  std::vector<Ref> state_out;
  for (std::uint32_t q = 0; q < S; ++q) {
    state_out.push_back(b.or_tree(collect(
        [q](const Transition& t) { return t.next == q; })));
  }
  // Successor head bits.
  std::vector<Ref> head_out;
  for (std::uint32_t j = 0; j < m; ++j) {
    std::vector<Ref> terms{b.and_(move_stay, head_in[j])};
    if (j + 1 < m) terms.push_back(b.and_(move_left, head_in[j + 1]));
    if (j > 0) terms.push_back(b.and_(move_right, head_in[j - 1]));
    head_out.push_back(b.or_tree(terms));
  }
  // Successor tape bits: cells away from the head keep their value, the
  // head cell takes the written bit.
  Ref write_one = b.or_tree(collect(
      [](const Transition& t) { return t.write == 1; }));
  std::vector<Ref> tape_out;
  for (std::uint32_t j = 0; j < m; ++j) {
    tape_out.push_back(b.or_(b.and_(b.not_(head_in[j]), tape_in[j]),
                             b.and_(head_in[j], write_one)));
  }

  for (Ref r : state_out) b.output(r);
  for (Ref r : head_out) b.output(r);
  for (Ref r : tape_out) b.output(r);
  b.output(halt);
  return b.take();
}

namespace {

struct CompiledStep {
  NetworkBuilder builder;
  CompiledPairs pairs;
  LayeredCircuit layered;
};

CompiledStep compile_step_parts(const ToyTM& tm) {
  CompiledStep cs;
  cs.layered = layerize(step_circuit(tm));
  cs.pairs = compile_into(cs.builder, cs.layered);
  return cs;
}

std::vector<std::int32_t> rail_layers(const NetworkBuilder& builder,
                                      const CompiledPairs& pairs,
                                      const LayeredCircuit& layered) {
  std::vector<std::int32_t> layers(builder.node_count(), -1);
  for (const DualPair& p : pairs.input_pairs) {
    layers[p.true_rail] = 0;
    layers[p.false_rail] = 0;
  }
  for (std::size_t g = 0; g < pairs.gate_pairs.size(); ++g) {
    std::int32_t d = static_cast<std::int32_t>(layered.gate_layers[g]);
    layers[pairs.gate_pairs[g].true_rail] = d;
    layers[pairs.gate_pairs[g].false_rail] = d;
  }
  return layers;
}

// Wires {signal rail, halt true rail, base true rail} into both rails of
// `target`, the invalidation step that turns a raised halt flag into an
// invalid output pair.
void wire_invalidation(NetworkBuilder& builder, const DualPair& signal,
                       const DualPair& halt, const BasePairHandle& base,
                       const DualPair& target) {
  builder.add_edge(signal.true_rail, target.true_rail);
  builder.add_edge(halt.true_rail, target.true_rail);
  builder.add_edge(base.pair.true_rail, target.true_rail);
  builder.add_edge(signal.false_rail, target.false_rail);
  builder.add_edge(halt.true_rail, target.false_rail);
  builder.add_edge(base.pair.true_rail, target.false_rail);
}

}  // namespace

StepNetwork compile_step_network(const ToyTM& tm) {
  CompiledStep cs = compile_step_parts(tm);
  const std::uint32_t n = tm.config_bits();
  StepNetwork sn;
  sn.base = cs.pairs.base;
  sn.input_pairs = cs.pairs.input_pairs;
  sn.halt_pair = cs.pairs.output_pairs[n];
  sn.depth = cs.layered.depth + 1;
  for (std::uint32_t i = 0; i < n; ++i) {
    DualPair out = cs.builder.add_pair();
    wire_invalidation(cs.builder, cs.pairs.output_pairs[i], sn.halt_pair,
                      sn.base, out);
    sn.output_pairs.push_back(out);
  }
  sn.node_layers = rail_layers(cs.builder, cs.pairs, cs.layered);
  for (const DualPair& p : sn.output_pairs) {
    sn.node_layers[p.true_rail] = static_cast<std::int32_t>(sn.depth);
    sn.node_layers[p.false_rail] = static_cast<std::int32_t>(sn.depth);
  }
  sn.network = cs.builder.build();
  return sn;
}

StepSimulation simulate_step_network(const StepNetwork& sn, const Bits& bits) {
  if (bits.size() != sn.input_pairs.size()) {
    fail_validation("simulate_step_network: encoding length mismatch");
  }
  Labelling state(sn.network.node_count());
  set_pair(state, sn.base.pair, true);
  for (std::size_t i = 0; i < bits.size(); ++i) {
    set_pair(state, sn.input_pairs[i], bits[i] != 0);
  }
  for (std::uint32_t t = 0; t < sn.depth; ++t) {
    state = synchronous_update(sn.network, state);
  }
  StepSimulation sim;
  sim.all_valid = true;
  for (const DualPair& p : sn.output_pairs) {
    PairValue v = pair_value(state, p);
    sim.pair_values.push_back(v);
    if (v == PairValue::kInvalid) {
      sim.all_valid = false;
      sim.outputs.push_back(0);
    } else {
      sim.outputs.push_back(v == PairValue::kTrue ? 1 : 0);
    }
  }
  return sim;
}

FuseLine build_fuse_line(NetworkBuilder& builder,
                         const std::vector<DualPair>& monitored) {
  if (monitored.empty()) {
    fail_validation("fuse line needs at least one monitored pair");
  }
  FuseLine line;
  std::optional<NodePair> previous;
  for (const DualPair& pair : monitored) {
    std::array<NodeId, 4> mid{};
    for (int c = 0; c < 2; ++c) {
      mid[c] = builder.add_node(NodeRole::kFuseIntermediate);
      builder.add_edge(pair.true_rail, mid[c]);
    }
    for (int c = 2; c < 4; ++c) {
      mid[c] = builder.add_node(NodeRole::kFuseIntermediate);
      builder.add_edge(pair.false_rail, mid[c]);
    }
    NodePair fuse{builder.add_node(NodeRole::kFuseRail),
                  builder.add_node(NodeRole::kFuseRail)};
    for (NodeId v : mid) {
      builder.add_edge(v, fuse.first);
      builder.add_edge(v, fuse.second);
    }
    if (previous) {
      builder.add_edge(previous->first, fuse.first);
      builder.add_edge(previous->first, fuse.second);
      builder.add_edge(previous->second, fuse.first);
      builder.add_edge(previous->second, fuse.second);
    }
    builder.annotations().fuse_pairs.push_back(fuse);
    line.pairs.push_back(fuse);
    line.intermediates.push_back(mid);
    previous = fuse;
  }
  return line;
}

ValveAlarm build_valve_alarm(NetworkBuilder& builder, NodePair last_fuse,
                             std::uint32_t k) {
  if (k < 2) fail_validation("alarm needs k >= 2");
  ValveAlarm va;
  va.p = NodePair{builder.add_node(NodeRole::kValveP),
                  builder.add_node(NodeRole::kValveP)};
  builder.add_edge(last_fuse.first, va.p.first);
  builder.add_edge(last_fuse.second, va.p.second);
  va.q = NodePair{builder.add_node(NodeRole::kValveQ),
                  builder.add_node(NodeRole::kValveQ)};
  builder.add_edge(va.p.first, va.q.first);
  builder.add_edge(va.p.second, va.q.second);
  for (std::uint32_t a = 0; a < 2 * k; ++a) {
    va.alarm.push_back(builder.add_node(NodeRole::kAlarm));
  }
  for (NodeId a : va.alarm) {
    for (NodeId other : va.alarm) {
      if (a != other) builder.add_edge(a, other);
    }
    builder.add_edge(va.q.first, a);
    builder.add_edge(va.q.second, a);
    builder.add_edge(a, va.p.first);
    builder.add_edge(a, va.p.second);
  }
  builder.annotations().valve_p = va.p;
  builder.annotations().valve_q = va.q;
  builder.annotations().alarm = va.alarm;
  return va;
}

MainNetwork assemble_main_network(const ToyTM& tm, std::uint32_t k) {
  if (k < 2) fail_validation("alarm needs k >= 2");
  CompiledStep cs = compile_step_parts(tm);
  const std::uint32_t n = tm.config_bits();

  MainNetwork mn;
  mn.tm = tm;
  mn.k = k;
  mn.depth = cs.layered.depth + 1;
  mn.base = cs.pairs.base;
  mn.input_pairs = cs.pairs.input_pairs;
  mn.halt_pair = cs.pairs.output_pairs[n];

  // Identify source pairs with sink pairs: the invalidation wiring that
  // would feed sink i goes straight into source pair i.
  for (std::uint32_t i = 0; i < n; ++i) {
    wire_invalidation(cs.builder, cs.pairs.output_pairs[i], mn.halt_pair,
                      mn.base, mn.input_pairs[i]);
  }

  mn.node_layers = rail_layers(cs.builder, cs.pairs, cs.layered);
  mn.dual_pairs = cs.builder.dual_pairs();
  mn.fuse = build_fuse_line(cs.builder, mn.dual_pairs);
  ValveAlarm va =
      build_valve_alarm(cs.builder, mn.fuse.pairs.back(), k);
  mn.valve_p = va.p;
  mn.valve_q = va.q;
  mn.alarm = va.alarm;

  // Alarm fan-out: every dual-pair node, the base pair and P (added in the
  // valve builder), but not the fuse line, intermediates or Q.
  for (NodeId a : mn.alarm) {
    for (const DualPair& pair : mn.dual_pairs) {
      cs.builder.add_edge(a, pair.true_rail);
      cs.builder.add_edge(a, pair.false_rail);
    }
    cs.builder.add_edge(a, mn.base.pair.true_rail);
    cs.builder.add_edge(a, mn.base.pair.false_rail);
  }

  mn.node_layers.resize(cs.builder.node_count(), -1);
  mn.network = cs.builder.build();
  return mn;
}

namespace {

// Fixed point of the sink-removed step dynamics inside the assembled
// network: source pairs and base are held, every other circuit rail takes
// the majority of its circuit influencers (the alarm edges are ignored).
Labelling auxiliary_on_main(const MainNetwork& mn, const Bits& encoded) {
  const SocialNetwork& net = mn.network;
  std::vector<std::uint8_t> is_alarm(net.node_count(), 0);
  for (NodeId a : mn.alarm) is_alarm[a] = 1;

  Labelling state(net.node_count());
  set_pair(state, mn.base.pair, true);
  for (std::size_t i = 0; i < encoded.size(); ++i) {
    set_pair(state, mn.input_pairs[i], encoded[i] != 0);
  }
  std::vector<NodeId> free_rails;
  for (NodeId v = 0; v < net.node_count(); ++v) {
    if (mn.node_layers[v] >= 1) free_rails.push_back(v);
  }
  for (std::uint32_t t = 0; t + 1 < mn.depth; ++t) {
    Labelling next = state;
    for (NodeId v : free_rails) {
      bool current = state.get(v);
      std::uint32_t disagree = 0, degree = 0;
      for (NodeId j : net.influencers(v)) {
        if (is_alarm[j]) continue;
        disagree += state.get(j) != current;
        ++degree;
      }
      next.set(v, disagree > degree - disagree ? !current : current);
    }
    state = std::move(next);
  }
  return state;
}

}  // namespace

Labelling initial_labelling(const MainNetwork& mn, const TMConfig& s) {
  Bits encoded = encode_config(mn.tm, s);
  Labelling f = auxiliary_on_main(mn, encoded);
  for (std::size_t j = 0; j < mn.fuse.pairs.size(); ++j) {
    const auto& mid = mn.fuse.intermediates[j];
    const DualPair& monitored = mn.dual_pairs[j];
    f.set(mid[0], f.get(monitored.true_rail));
    f.set(mid[1], f.get(monitored.true_rail));
    f.set(mid[2], f.get(monitored.false_rail));
    f.set(mid[3], f.get(monitored.false_rail));
    f.set(mn.fuse.pairs[j].first, true);
    f.set(mn.fuse.pairs[j].second, false);
  }
  f.set(mn.valve_p.first, true);
  f.set(mn.valve_p.second, false);
  f.set(mn.valve_q.first, true);
  f.set(mn.valve_q.second, false);
  for (std::size_t a = 0; a < mn.alarm.size(); ++a) {
    f.set(mn.alarm[a], a >= mn.k);
  }
  return f;
}

void validate_initial_conditions(const MainNetwork& mn, const Labelling& f) {
  if (f.size() != mn.network.node_count()) {
    fail_validation("labelling length mismatch");
  }
  for (const DualPair& pair : mn.dual_pairs) {
    if (pair_value(f, pair) == PairValue::kInvalid) {
      fail_validation("condition (i): invalid dual pair");
    }
  }
  if (pair_value(f, mn.base.pair) != PairValue::kTrue) {
    fail_validation("condition (i): base pair must be (1,0)");
  }
  for (const NodePair& fuse : mn.fuse.pairs) {
    if (f.get(fuse.first) == f.get(fuse.second)) {
      fail_validation("condition (ii): invalid fuse pair");
    }
  }
  if (f.get(mn.valve_p.first) == f.get(mn.valve_p.second) ||
      f.get(mn.valve_q.first) == f.get(mn.valve_q.second)) {
    fail_validation("condition (ii): invalid valve pair");
  }
  std::size_t zeros = 0;
  for (NodeId a : mn.alarm) zeros += !f.get(a);
  if (zeros != mn.k) {
    fail_validation("condition (iii): alarm must be evenly split");
  }
  for (const auto& mid : mn.fuse.intermediates) {
    std::size_t mid_zeros = 0;
    for (NodeId v : mid) mid_zeros += !f.get(v);
    if (mid_zeros != 2) {
      fail_validation(
          "condition (iv): exactly two of four intermediates must be 0");
    }
  }
}

ReductionVerdict run_reduction_demo(const ToyTM& tm, const TMConfig& s,
                                    std::uint32_t k,
                                    std::optional<std::uint64_t> budget) {
  MainNetwork mn = assemble_main_network(tm, k);
  Labelling f0 = initial_labelling(mn, s);
  RunOptions options;
  options.max_steps = budget;
  options.record_trajectory = false;
  RunResult result = run(mn.network, f0, options);

  ReductionVerdict verdict;
  if (const auto* cycles = std::get_if<Cycles>(&result.outcome)) {
    verdict.kind = ReductionVerdict::Kind::kNonConvergent;
    verdict.preperiod = cycles->preperiod;
    verdict.period = cycles->period;
  } else if (const auto* converged = std::get_if<Converged>(&result.outcome)) {
    verdict.kind = ReductionVerdict::Kind::kConvergent;
    verdict.steps = converged->steps;
    verdict.limit_constant = converged->limit.all_equal();
    verdict.limit_value =
        converged->limit.size() > 0 && converged->limit.get(0);
  } else {
    verdict.kind = ReductionVerdict::Kind::kUndetermined;
    verdict.budget = std::get<Undetermined>(result.outcome).budget;
  }
  return verdict;
}

LemmaRig build_lemma_rig(std::uint32_t k) {
  NetworkBuilder builder;
  LemmaRig rig;
  rig.dual = builder.add_pair();
  FuseLine line = build_fuse_line(builder, {rig.dual});
  rig.fuse = line.pairs[0];
  rig.intermediates = line.intermediates[0];
  ValveAlarm va = build_valve_alarm(builder, rig.fuse, k);
  rig.p = va.p;
  rig.q = va.q;
  rig.alarm = va.alarm;
  for (NodeId a : rig.alarm) {
    builder.add_edge(a, rig.dual.true_rail);
    builder.add_edge(a, rig.dual.false_rail);
  }
  rig.network = builder.build();
  return rig;
}

std::optional<Bits> decode_pairs(const Labelling& f,
                                 const std::vector<DualPair>& pairs) {
  Bits bits;
  bits.reserve(pairs.size());
  for (const DualPair& p : pairs) {
    PairValue v = pair_value(f, p);
    if (v == PairValue::kInvalid) return std::nullopt;
    bits.push_back(v == PairValue::kTrue ? 1 : 0);
  }
  return bits;
}

}  // namespace majnet
