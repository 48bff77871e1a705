#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "majnet/network.hpp"

namespace majnet {

// Binary opinion vector, bit i = opinion of agent i. Word-packed so large
// compiled networks stay cheap to copy and hash.
class Labelling {
 public:
  Labelling() = default;
  explicit Labelling(std::size_t n, bool fill = false);

  // Low 'n' bits of 'bits' (bit i = agent i); n <= 64.
  static Labelling from_bits(std::size_t n, std::uint64_t bits);
  // String over {0,1}, character i = opinion of agent i.
  static Labelling from_string(const std::string& text);

  std::size_t size() const { return n_; }
  bool get(std::size_t i) const {
    return (words_[i >> 6] >> (i & 63)) & 1u;
  }
  void set(std::size_t i, bool value) {
    std::uint64_t mask = std::uint64_t{1} << (i & 63);
    if (value) {
      words_[i >> 6] |= mask;
    } else {
      words_[i >> 6] &= ~mask;
    }
  }

  std::size_t count_ones() const;
  bool all_equal() const;  // unanimous (also true for n <= 1)
  std::string to_string() const;
  std::uint64_t to_bits() const;  // n <= 64

  const std::vector<std::uint64_t>& words() const { return words_; }

  friend bool operator==(const Labelling&, const Labelling&) = default;

  // Compare as little-endian integers (bit 0 least significant).
  static bool value_less(const Labelling& a, const Labelling& b);

 private:
  std::size_t n_ = 0;
  std::vector<std::uint64_t> words_;
};

struct LabellingHash {
  std::size_t operator()(const Labelling& l) const;
};

// Bitwise flip of every opinion.
Labelling complement(const Labelling& f);

// Pointwise f <= g.
bool labelling_leq(const Labelling& f, const Labelling& g);

// Next opinion of agent i: flips iff strictly more influencers disagree
// than agree. Agents without influencers never change.
bool opinion_change(const SocialNetwork& net, const Labelling& f, NodeId i);

// All agents update simultaneously from the same pre-state.
Labelling synchronous_update(const SocialNetwork& net, const Labelling& f);

bool is_stable(const SocialNetwork& net, const Labelling& f);

struct Converged {
  std::uint64_t steps = 0;
  Labelling limit;
};

struct Cycles {
  std::uint64_t preperiod = 0;
  std::uint64_t period = 0;  // always >= 2
  Labelling witness;         // state at time `preperiod`, recurs after `period`
};

struct Undetermined {
  std::uint64_t budget = 0;
};

using ConvergenceOutcome = std::variant<Converged, Cycles, Undetermined>;

// The recorded update sequence. state 0 is the initial labelling;
// consecutive states are related by synchronous_update. When the run ended
// by itself the final state either equals an earlier one (cycle closure)
// or is a fixed point; under a budget it simply stops.
struct Trajectory {
  std::vector<Labelling> states;

  enum class Terminal { kFixedPoint, kCycleClosure, kBudgetExhausted };
  Terminal terminal = Terminal::kFixedPoint;
};

struct RunOptions {
  // Step budget; without one the run always terminates on its own because
  // the state space is finite and the map deterministic.
  std::optional<std::uint64_t> max_steps;
  // Stored-state cap for exact repeat detection. Beyond it the run switches
  // to a constant-memory iterate-comparison scheme (slower, still exact)
  // unless fail_on_cap is set, in which case it refuses instead.
  std::uint64_t state_cap = std::uint64_t{1} << 26;
  bool fail_on_cap = false;
  bool record_trajectory = true;
};

struct RunResult {
  ConvergenceOutcome outcome;
  // Present when the full sequence fit within the stored-state cap and
  // recording was requested.
  std::optional<Trajectory> trajectory;
  std::uint64_t states_explored = 0;
};

// Deterministic exact run; no false cycle reports.
RunResult run(const SocialNetwork& net, const Labelling& start,
              const RunOptions& options = {});

struct GuaranteeOptions {
  std::uint32_t exhaustive_cap = 24;  // refuse above this many agents
  std::uint32_t jobs = 1;
  // When set, every candidate is examined and the witness with the
  // smallest integer value (bit 0 least significant) is returned,
  // independent of scheduling.
  bool deterministic = false;
};

// Searches for a labelling from which the network does not converge.
// Self-duality lets it enumerate only labellings with bit 0 = 0; the
// complement of any witness is a witness too. Throws Error(kRefusal) when
// node_count exceeds the cap.
std::optional<Labelling> guarantee_search(const SocialNetwork& net,
                                          const GuaranteeOptions& options = {});

// True iff every labelling converges within `bound` steps. Same cap rules
// as guarantee_search.
bool verify_bound(const SocialNetwork& net, std::uint64_t bound,
                  std::uint32_t exhaustive_cap = 24);

}  // namespace majnet
