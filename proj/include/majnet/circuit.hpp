#pragma once

#include <cstdint>
#include <vector>

#include "majnet/gadgets.hpp"

namespace majnet {

using Bits = std::vector<std::uint8_t>;

enum class GateOp : std::uint8_t {
  kAnd,
  kOr,
  kNot,
  kNop,
  kConstTrue,
  kConstFalse,
};

// Reference to a signal: a circuit input or an earlier gate.
struct Ref {
  enum class Kind : std::uint8_t { kInput, kGate };
  Kind kind = Kind::kInput;
  std::uint32_t index = 0;

  static Ref input(std::uint32_t i) { return {Kind::kInput, i}; }
  static Ref gate(std::uint32_t g) { return {Kind::kGate, g}; }

  friend bool operator==(const Ref&, const Ref&) = default;
};

struct Gate {
  GateOp op = GateOp::kNop;
  std::vector<Ref> args;
};

// Boolean circuit with fan-in <= 2. Gate ids are positions in `gates`;
// args may reference inputs or strictly earlier gates, which keeps the
// circuit acyclic by construction.
struct Circuit {
  std::uint32_t input_count = 0;
  std::vector<Gate> gates;
  std::vector<Ref> outputs;

  // Throws Error(kValidation) on arity or reference violations.
  void validate() const;
};

Bits evaluate(const Circuit& circuit, const Bits& x);

// Circuit padded with NOP gates so that every input-to-output path has
// length exactly `depth`. Gates are ordered by layer, ids dense; constant
// gates sit at layer 1 (one copy-step after the base pair).
struct LayeredCircuit {
  Circuit circuit;
  std::vector<std::uint32_t> gate_layers;
  std::uint32_t depth = 0;  // h
};

// Semantics-preserving; depth <= original depth + 1 where outputs that
// reference inputs directly count as depth 1.
LayeredCircuit layerize(const Circuit& circuit);

// Pair bookkeeping produced while compiling into a builder; exposed so the
// reduction can keep extending the same network.
struct CompiledPairs {
  BasePairHandle base;
  std::vector<DualPair> input_pairs;
  std::vector<DualPair> gate_pairs;    // indexed by layered-gate id
  std::vector<DualPair> output_pairs;  // pairs of the output refs
};

// Emits one dual pair per input and per gate into `builder` (which must
// not already hold a base pair): AND/OR/NOT/NOP become their gadgets,
// CONST_TRUE a NOP of the base pair and CONST_FALSE a NOT of it.
CompiledPairs compile_into(NetworkBuilder& builder,
                           const LayeredCircuit& layered);

struct CompiledCircuit {
  SocialNetwork network;
  BasePairHandle base;
  std::vector<DualPair> input_pairs;
  std::vector<DualPair> output_pairs;
  std::vector<DualPair> gate_pairs;
  // Layer of each node: inputs 0, gate rails their gate's layer, base -1.
  std::vector<std::int32_t> node_layers;
  std::uint32_t depth = 0;  // h
};

CompiledCircuit compile(const LayeredCircuit& layered);

// Sets a dual pair to (1,0) for true / (0,1) for false.
void set_pair(Labelling& f, const DualPair& p, bool value);

// Labels inputs with the dual-rail encoding of x, the base pair with
// (1,0) and every other node with 0, runs `depth` synchronous steps and
// decodes the output pairs (all valid by construction).
Bits simulate_compiled(const CompiledCircuit& cc, const Bits& x);

// The fixed point the sink-removed network reaches when the source layer
// encodes s: every non-sink dual pair is valid and carries the value its
// gate computes on s. Values at sink nodes are incidental. The result is
// independent of `fill`, the value used for unconstrained nodes.
Labelling auxiliary_labelling(const CompiledCircuit& cc, const Bits& s,
                              bool fill = false);

}  // namespace majnet
