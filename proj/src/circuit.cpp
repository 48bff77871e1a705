#include "majnet/circuit.hpp"

#include <algorithm>
#include <map>

#include "majnet/error.hpp"

namespace majnet {

namespace {

std::uint32_t arity(GateOp op) {
  switch (op) {
    case GateOp::kAnd:
    case GateOp::kOr:
      return 2;
    case GateOp::kNot:
    case GateOp::kNop:
      return 1;
    case GateOp::kConstTrue:
    case GateOp::kConstFalse:
      return 0;
  }
  return 0;
}

}  // namespace

void Circuit::validate() const {
  for (std::size_t g = 0; g < gates.size(); ++g) {
    const Gate& gate = gates[g];
    if (gate.args.size() != arity(gate.op)) {
      fail_validation("gate " + std::to_string(g) + " has arity " +
                      std::to_string(gate.args.size()) + ", expected " +
                      std::to_string(arity(gate.op)));
    }
    for (const Ref& ref : gate.args) {
      if (ref.kind == Ref::Kind::kInput) {
        if (ref.index >= input_count) {
          fail_validation("gate " + std::to_string(g) +
                          " references input " + std::to_string(ref.index) +
                          " out of range");
        }
      } else if (ref.index >= g) {
        fail_validation("gate " + std::to_string(g) +
                        " references gate " + std::to_string(ref.index) +
                        " (refs must point to earlier gates)");
      }
    }
  }
  for (const Ref& ref : outputs) {
    std::uint32_t limit =
        ref.kind == Ref::Kind::kInput ? input_count
                                      : static_cast<std::uint32_t>(gates.size());
    if (ref.index >= limit) {
      fail_validation("output reference out of range");
    }
  }
}

Bits evaluate(const Circuit& circuit, const Bits& x) {
  if (x.size() != circuit.input_count) {
    fail_validation("evaluate: input size mismatch");
  }
  std::vector<std::uint8_t> values(circuit.gates.size(), 0);
  auto value_of = [&](const Ref& ref) -> std::uint8_t {
    return ref.kind == Ref::Kind::kInput ? x[ref.index] : values[ref.index];
  };
  for (std::size_t g = 0; g < circuit.gates.size(); ++g) {
    const Gate& gate = circuit.gates[g];
    switch (gate.op) {
      case GateOp::kAnd:
        values[g] = value_of(gate.args[0]) & value_of(gate.args[1]);
        break;
      case GateOp::kOr:
        values[g] = value_of(gate.args[0]) | value_of(gate.args[1]);
        break;
      case GateOp::kNot:
        values[g] = !value_of(gate.args[0]);
        break;
      case GateOp::kNop:
        values[g] = value_of(gate.args[0]);
        break;
      case GateOp::kConstTrue:
        values[g] = 1;
        break;
      case GateOp::kConstFalse:
        values[g] = 0;
        break;
    }
  }
  Bits out;
  out.reserve(circuit.outputs.size());
  for (const Ref& ref : circuit.outputs) out.push_back(value_of(ref));
  return out;
}

LayeredCircuit layerize(const Circuit& circuit) {
  circuit.validate();
  const std::uint32_t n_gates = static_cast<std::uint32_t>(circuit.gates.size());

  // Natural layers: inputs at 0, constants at 1, gates one past their
  // deepest argument.
  std::vector<std::uint32_t> layer(n_gates, 0);
  auto ref_layer = [&](const Ref& ref) -> std::uint32_t {
    return ref.kind == Ref::Kind::kInput ? 0 : layer[ref.index];
  };
  for (std::uint32_t g = 0; g < n_gates; ++g) {
    const Gate& gate = circuit.gates[g];
    if (gate.args.empty()) {
      layer[g] = 1;
    } else {
      std::uint32_t deepest = 0;
      for (const Ref& ref : gate.args) deepest = std::max(deepest, ref_layer(ref));
      layer[g] = deepest + 1;
    }
  }
  std::uint32_t h = 1;
  for (const Ref& ref : circuit.outputs) h = std::max(h, ref_layer(ref));

  // Gates unreachable from the outputs are dropped; they would compile to
  // spurious sink pairs.
  std::vector<bool> live(n_gates, false);
  {
    std::vector<std::uint32_t> work;
    auto mark = [&](const Ref& ref) {
      if (ref.kind == Ref::Kind::kGate && !live[ref.index]) {
        live[ref.index] = true;
        work.push_back(ref.index);
      }
    };
    for (const Ref& ref : circuit.outputs) mark(ref);
    while (!work.empty()) {
      std::uint32_t g = work.back();
      work.pop_back();
      for (const Ref& ref : circuit.gates[g].args) mark(ref);
    }
  }

  // How high each referenced signal must be lifted with NOP chains.
  struct RefKey {
    std::uint8_t kind;
    std::uint32_t index;
    bool operator<(const RefKey& o) const {
      return kind != o.kind ? kind < o.kind : index < o.index;
    }
  };
  auto key_of = [](const Ref& r) {
    return RefKey{static_cast<std::uint8_t>(r.kind), r.index};
  };
  std::map<RefKey, std::uint32_t> lift_to;
  auto demand = [&](const Ref& ref, std::uint32_t needed_layer) {
    if (ref_layer(ref) >= needed_layer) return;
    auto [it, fresh] = lift_to.emplace(key_of(ref), needed_layer);
    if (!fresh) it->second = std::max(it->second, needed_layer);
  };
  for (std::uint32_t g = 0; g < n_gates; ++g) {
    if (!live[g]) continue;
    for (const Ref& ref : circuit.gates[g].args) demand(ref, layer[g] - 1);
  }
  for (const Ref& ref : circuit.outputs) demand(ref, h);

  // Rebuild layer by layer: original gates of the layer first, then the
  // NOP lifts, so ids stay dense and topologically ordered.
  LayeredCircuit result;
  result.circuit.input_count = circuit.input_count;
  result.depth = h;
  std::vector<std::uint32_t> gate_map(n_gates, 0);
  std::map<RefKey, Ref> lifted;  // current highest lift per signal

  auto translate = [&](const Ref& ref, std::uint32_t at_layer) -> Ref {
    if (ref_layer(ref) == at_layer) {
      return ref.kind == Ref::Kind::kInput ? ref
                                           : Ref::gate(gate_map[ref.index]);
    }
    return lifted.at(key_of(ref));
  };

  for (std::uint32_t d = 1; d <= h; ++d) {
    for (std::uint32_t g = 0; g < n_gates; ++g) {
      if (!live[g] || layer[g] != d) continue;
      Gate gate;
      gate.op = circuit.gates[g].op;
      for (const Ref& ref : circuit.gates[g].args) {
        gate.args.push_back(translate(ref, d - 1));
      }
      gate_map[g] = static_cast<std::uint32_t>(result.circuit.gates.size());
      result.circuit.gates.push_back(std::move(gate));
      result.gate_layers.push_back(d);
    }
    for (const auto& [key, target] : lift_to) {
      Ref original{static_cast<Ref::Kind>(key.kind), key.index};
      if (ref_layer(original) >= d || target < d) continue;
      Ref below = translate(original, d - 1);
      Gate nop{GateOp::kNop, {below}};
      std::uint32_t id = static_cast<std::uint32_t>(result.circuit.gates.size());
      result.circuit.gates.push_back(std::move(nop));
      result.gate_layers.push_back(d);
      lifted[key] = Ref::gate(id);
    }
  }

  for (const Ref& ref : circuit.outputs) {
    result.circuit.outputs.push_back(translate(ref, h));
  }
  result.circuit.validate();
  return result;
}

CompiledPairs compile_into(NetworkBuilder& builder,
                           const LayeredCircuit& layered) {
  const Circuit& circuit = layered.circuit;
  CompiledPairs pairs;
  pairs.base = builder.add_base_pair();
  for (std::uint32_t i = 0; i < circuit.input_count; ++i) {
    pairs.input_pairs.push_back(builder.add_pair());
  }
  auto pair_of = [&](const Ref& ref) -> DualPair {
    return ref.kind == Ref::Kind::kInput ? pairs.input_pairs[ref.index]
                                         : pairs.gate_pairs[ref.index];
  };
  for (const Gate& gate : circuit.gates) {
    DualPair out;
    switch (gate.op) {
      case GateOp::kAnd:
        out = builder.add_and(pair_of(gate.args[0]), pair_of(gate.args[1]),
                              pairs.base);
        break;
      case GateOp::kOr:
        out = builder.add_or(pair_of(gate.args[0]), pair_of(gate.args[1]),
                             pairs.base);
        break;
      case GateOp::kNot:
        out = builder.add_not(pair_of(gate.args[0]));
        break;
      case GateOp::kNop:
        out = builder.add_nop(pair_of(gate.args[0]));
        break;
      case GateOp::kConstTrue:
        out = builder.add_nop(pairs.base.pair);
        break;
      case GateOp::kConstFalse:
        out = builder.add_not(pairs.base.pair);
        break;
    }
    pairs.gate_pairs.push_back(out);
  }
  for (const Ref& ref : circuit.outputs) {
    pairs.output_pairs.push_back(pair_of(ref));
  }
  return pairs;
}

CompiledCircuit compile(const LayeredCircuit& layered) {
  NetworkBuilder builder;
  CompiledPairs pairs = compile_into(builder, layered);
  CompiledCircuit cc;
  cc.node_layers.assign(builder.node_count(), -1);
  for (const DualPair& p : pairs.input_pairs) {
    cc.node_layers[p.true_rail] = 0;
    cc.node_layers[p.false_rail] = 0;
  }
  for (std::size_t g = 0; g < pairs.gate_pairs.size(); ++g) {
    std::int32_t d = static_cast<std::int32_t>(layered.gate_layers[g]);
    cc.node_layers[pairs.gate_pairs[g].true_rail] = d;
    cc.node_layers[pairs.gate_pairs[g].false_rail] = d;
  }
  cc.network = builder.build();
  cc.base = pairs.base;
  cc.input_pairs = std::move(pairs.input_pairs);
  cc.output_pairs = std::move(pairs.output_pairs);
  cc.gate_pairs = std::move(pairs.gate_pairs);
  cc.depth = layered.depth;
  return cc;
}

void set_pair(Labelling& f, const DualPair& p, bool value) {
  f.set(p.true_rail, value);
  f.set(p.false_rail, !value);
}

Bits simulate_compiled(const CompiledCircuit& cc, const Bits& x) {
  if (x.size() != cc.input_pairs.size()) {
    fail_validation("simulate_compiled: input size mismatch");
  }
  Labelling state(cc.network.node_count());
  set_pair(state, cc.base.pair, true);
  for (std::size_t i = 0; i < x.size(); ++i) {
    set_pair(state, cc.input_pairs[i], x[i] != 0);
  }
  for (std::uint32_t t = 0; t < cc.depth; ++t) {
    state = synchronous_update(cc.network, state);
  }
  Bits out;
  out.reserve(cc.output_pairs.size());
  for (const DualPair& p : cc.output_pairs) {
    PairValue v = pair_value(state, p);
    if (v == PairValue::kInvalid) {
      throw Error(ErrorKind::kInternal,
                  "simulate_compiled: invalid output pair");
    }
    out.push_back(v == PairValue::kTrue ? 1 : 0);
  }
  return out;
}

Labelling auxiliary_labelling(const CompiledCircuit& cc, const Bits& s,
                              bool fill) {
  if (s.size() != cc.input_pairs.size()) {
    fail_validation("auxiliary_labelling: input size mismatch");
  }
  Labelling state(cc.network.node_count(), fill);
  set_pair(state, cc.base.pair, true);
  for (std::size_t i = 0; i < s.size(); ++i) {
    set_pair(state, cc.input_pairs[i], s[i] != 0);
  }
  for (std::uint32_t t = 0; t + 1 < cc.depth; ++t) {
    state = synchronous_update(cc.network, state);
  }
  return state;
}

}  // namespace majnet
