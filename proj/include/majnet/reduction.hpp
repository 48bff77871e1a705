#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "majnet/circuit.hpp"

namespace majnet {

enum class Move : std::uint8_t { kLeft, kRight, kStay };

struct TransitionRule {
  std::string state;
  std::uint8_t read = 0;
  std::uint8_t write = 0;
  Move move = Move::kStay;
  std::string next;
};

struct Transition {
  std::uint8_t write = 0;
  Move move = Move::kStay;
  std::uint32_t next = 0;
};

// Explicit space-bounded machine over alphabet {0,1} with a fixed tape of
// m cells. Transitions are total on non-halting states. A configuration
// whose transition would move the head off the tape has no successor and
// counts as halting.
class ToyTM {
 public:
  static ToyTM build(std::vector<std::string> states,
                     const std::string& initial,
                     const std::vector<std::string>& halting,
                     std::uint32_t tape_len,
                     const std::vector<TransitionRule>& rules);

  std::uint32_t state_count() const {
    return static_cast<std::uint32_t>(state_names_.size());
  }
  std::uint32_t tape_len() const { return tape_len_; }
  // Encoding length n: one-hot state, one-hot head, one bit per cell.
  std::uint32_t config_bits() const { return state_count() + 2 * tape_len_; }

  const std::string& state_name(std::uint32_t q) const {
    return state_names_[q];
  }
  std::uint32_t state_index(const std::string& name) const;
  std::uint32_t initial_state() const { return initial_; }
  bool is_halting(std::uint32_t q) const { return halting_[q]; }
  const std::vector<std::string>& state_names() const { return state_names_; }
  const std::vector<std::uint8_t>& halting_mask() const { return halting_; }

  // Defined for non-halting states only.
  const Transition& transition(std::uint32_t q, std::uint8_t read) const;

 private:
  std::vector<std::string> state_names_;
  std::uint32_t initial_ = 0;
  std::vector<std::uint8_t> halting_;
  std::uint32_t tape_len_ = 1;
  std::vector<std::optional<Transition>> rules_;  // [q * 2 + read]
};

struct TMConfig {
  std::uint32_t state = 0;
  std::uint32_t head = 0;
  Bits tape;

  friend bool operator==(const TMConfig&, const TMConfig&) = default;
};

// Layout: [state one-hot | head one-hot | tape bits].
Bits encode_config(const ToyTM& tm, const TMConfig& config);
// nullopt when the state or head block does not contain exactly one bit.
std::optional<TMConfig> decode_config(const ToyTM& tm, const Bits& bits);

// Reference semantics; nullopt when the configuration has no successor
// (halting state, or the move would leave the tape).
std::optional<TMConfig> tm_step(const ToyTM& tm, const TMConfig& config);

// Circuit with n = config_bits() inputs and n + 1 outputs: outputs 0..n-1
// are the successor encoding and output n is a halt flag that is raised for
// halting states, malformed encodings (state or head block populations
// other than one) and moves that would leave the tape. When the flag is
// low, outputs 0..n-1 equal the tm_step successor encoding.
Circuit step_circuit(const ToyTM& tm);

// The acyclic simulation network: compiled step circuit plus one
// invalidating output pair per configuration bit. Each sink rail takes the
// majority of {signal rail, halt true rail, base true rail}, so a raised
// halt flag drives both rails of every output pair to 1.
struct StepNetwork {
  SocialNetwork network;
  BasePairHandle base;
  std::vector<DualPair> input_pairs;   // n sources
  std::vector<DualPair> output_pairs;  // n sinks
  DualPair halt_pair;
  std::uint32_t depth = 0;  // h: uniform source-pair-to-sink path length
  std::vector<std::int32_t> node_layers;  // -1 for the base pair
};

StepNetwork compile_step_network(const ToyTM& tm);

struct StepSimulation {
  Bits outputs;           // decoded where valid
  bool all_valid = false;
  std::vector<PairValue> pair_values;
};

// Feeds an n-bit encoding through the step network (depth steps).
StepSimulation simulate_step_network(const StepNetwork& sn, const Bits& bits);

// One fuse pair per monitored dual pair. The monitored pair feeds four
// fresh intermediates (two per rail), each feeding both fuse nodes; both
// nodes of fuse pair j feed both nodes of pair j+1. Both nodes of any fuse
// pair therefore share their full influencer set.
struct FuseLine {
  std::vector<NodePair> pairs;
  // Per pair: two copies of the true rail, then two of the false rail.
  std::vector<std::array<NodeId, 4>> intermediates;
};

FuseLine build_fuse_line(NetworkBuilder& builder,
                         const std::vector<DualPair>& monitored);

// Valve and alarm: the last fuse pair feeds P nodewise, P feeds Q
// nodewise, both Q nodes feed every alarm node, the alarm is a 2k-clique
// and every alarm node feeds both P nodes. Requires k >= 2.
struct ValveAlarm {
  NodePair p;
  NodePair q;
  std::vector<NodeId> alarm;
};

ValveAlarm build_valve_alarm(NetworkBuilder& builder, NodePair last_fuse,
                             std::uint32_t k);

// The assembled cyclic network: step network with the i-th source pair
// identified with the i-th sink pair, a fuse line over every dual pair,
// and the valve/alarm with edges from the alarm to every dual-pair node
// (including the base pair) and to P.
struct MainNetwork {
  SocialNetwork network;
  ToyTM tm;
  std::uint32_t depth = 0;  // h; all circuit-part cycles have length % h == 0
  std::uint32_t k = 2;
  BasePairHandle base;
  std::vector<DualPair> input_pairs;  // the identified source/sink layer
  std::vector<DualPair> dual_pairs;   // fuse order: inputs, then gates
  DualPair halt_pair;
  FuseLine fuse;
  NodePair valve_p, valve_q;
  std::vector<NodeId> alarm;
  std::vector<std::int32_t> node_layers;  // circuit rails only, else -1
};

MainNetwork assemble_main_network(const ToyTM& tm, std::uint32_t k = 2);

// The canonical starting labelling for configuration s: circuit rails take
// the auxiliary fixed-point values, every fuse/valve pair is (1,0), the
// alarm holds k zeros then k ones and the intermediates copy their
// monitored rails.
Labelling initial_labelling(const MainNetwork& mn, const TMConfig& s);

// Accepts any labelling whose fuse, valve and intermediate conditions hold:
// all dual pairs and fuse/valve pairs valid, alarm evenly split, and every
// intermediate quadruple holding exactly two zeros. Throws kValidation
// with the violated condition otherwise.
void validate_initial_conditions(const MainNetwork& mn, const Labelling& f);

struct ReductionVerdict {
  enum class Kind { kNonConvergent, kConvergent, kUndetermined };
  Kind kind = Kind::kUndetermined;
  std::uint64_t preperiod = 0, period = 0;  // non-convergent
  std::uint64_t steps = 0;                  // convergent
  bool limit_constant = false;
  bool limit_value = false;
  std::uint64_t budget = 0;  // undetermined
};

ReductionVerdict run_reduction_demo(
    const ToyTM& tm, const TMConfig& s, std::uint32_t k = 2,
    std::optional<std::uint64_t> budget = std::nullopt);

// Isolated apparatus for the alarm analysis: one dual pair (fed only by
// the alarm), its intermediates and single fuse pair, the valve and the
// alarm. 6 + 2k + 8 nodes.
struct LemmaRig {
  SocialNetwork network;
  DualPair dual;
  std::array<NodeId, 4> intermediates;
  NodePair fuse;
  NodePair p, q;
  std::vector<NodeId> alarm;
};

LemmaRig build_lemma_rig(std::uint32_t k = 2);

// Decodes a list of pairs; nullopt when any pair is invalid.
std::optional<Bits> decode_pairs(const Labelling& f,
                                 const std::vector<DualPair>& pairs);

}  // namespace majnet
