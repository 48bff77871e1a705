#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "majnet/circuit.hpp"
#include "majnet/network.hpp"
#include "majnet/reduction.hpp"

namespace majnet::testing {

// Three agents on a directed cycle 0 -> 1 -> 2 -> 0.
inline SocialNetwork fig2_network() {
  return SocialNetwork::build(3, {{0, 1}, {1, 2}, {2, 0}});
}

// Two 3-node strongly connected components joined by one edge (4 -> 1).
// Nodes 0..2 form the lower component, 3..5 the upper one.
inline SocialNetwork fig3_network() {
  return SocialNetwork::build(6, {{0, 1},
                                  {0, 2},
                                  {1, 0},
                                  {1, 2},
                                  {2, 1},
                                  {3, 4},
                                  {3, 5},
                                  {4, 3},
                                  {4, 5},
                                  {5, 4},
                                  {4, 1}});
}

inline Labelling fig3_labelling() { return Labelling::from_string("011100"); }

inline SocialNetwork clique(NodeId n) {
  std::vector<Edge> edges;
  for (NodeId u = 0; u < n; ++u) {
    for (NodeId v = 0; v < n; ++v) {
      if (u != v) edges.push_back({u, v});
    }
  }
  return SocialNetwork::build(n, std::move(edges));
}

inline SocialNetwork chain(NodeId n) {
  std::vector<Edge> edges;
  for (NodeId u = 0; u + 1 < n; ++u) edges.push_back({u, u + 1});
  return SocialNetwork::build(n, std::move(edges));
}

using Rng = std::mt19937_64;

inline SocialNetwork random_network(NodeId n, double p, Rng& rng) {
  std::bernoulli_distribution coin(p);
  std::vector<Edge> edges;
  for (NodeId u = 0; u < n; ++u) {
    for (NodeId v = 0; v < n; ++v) {
      if (u != v && coin(rng)) edges.push_back({u, v});
    }
  }
  return SocialNetwork::build(n, std::move(edges));
}

inline SocialNetwork random_dag(NodeId n, double p, Rng& rng) {
  std::vector<NodeId> order(n);
  for (NodeId i = 0; i < n; ++i) order[i] = i;
  std::shuffle(order.begin(), order.end(), rng);
  std::bernoulli_distribution coin(p);
  std::vector<Edge> edges;
  for (NodeId i = 0; i < n; ++i) {
    for (NodeId j = i + 1; j < n; ++j) {
      if (coin(rng)) edges.push_back({order[i], order[j]});
    }
  }
  return SocialNetwork::build(n, std::move(edges));
}

inline Labelling random_labelling(std::size_t n, Rng& rng) {
  Labelling f(n);
  std::bernoulli_distribution coin(0.5);
  for (std::size_t i = 0; i < n; ++i) f.set(i, coin(rng));
  return f;
}

// Random fan-in <= 2 circuit whose args point at earlier signals.
inline Circuit random_circuit(std::uint32_t inputs, std::uint32_t gates,
                              Rng& rng) {
  Circuit c;
  c.input_count = inputs;
  auto random_ref = [&](std::uint32_t gate_id) {
    std::uniform_int_distribution<std::uint32_t> pick(0, inputs + gate_id - 1);
    std::uint32_t r = pick(rng);
    return r < inputs ? Ref::input(r) : Ref::gate(r - inputs);
  };
  std::uniform_int_distribution<int> op_pick(0, 5);
  for (std::uint32_t g = 0; g < gates; ++g) {
    Gate gate;
    switch (op_pick(rng)) {
      case 0: gate.op = GateOp::kAnd; break;
      case 1: gate.op = GateOp::kOr; break;
      case 2: gate.op = GateOp::kNot; break;
      case 3: gate.op = GateOp::kNop; break;
      case 4: gate.op = GateOp::kConstTrue; break;
      default: gate.op = GateOp::kConstFalse; break;
    }
    if (gate.op == GateOp::kAnd || gate.op == GateOp::kOr) {
      gate.args = {random_ref(g), random_ref(g)};
    } else if (gate.op == GateOp::kNot || gate.op == GateOp::kNop) {
      gate.args = {random_ref(g)};
    }
    c.gates.push_back(std::move(gate));
  }
  std::uniform_int_distribution<std::uint32_t> out_count(1, 3);
  std::uint32_t outs = out_count(rng);
  for (std::uint32_t o = 0; o < outs; ++o) {
    std::uniform_int_distribution<std::uint32_t> pick(
        0, inputs + gates - 1);
    std::uint32_t r = pick(rng);
    c.outputs.push_back(r < inputs ? Ref::input(r) : Ref::gate(r - inputs));
  }
  return c;
}

// Bounces between the tape walls forever when started from the marked
// tape 1..01 with the head inside; never has halting states.
inline ToyTM pingpong_tm(std::uint32_t m = 3) {
  return ToyTM::build(
      {"right", "left"}, "right", {}, m,
      {{"right", 0, 0, Move::kRight, "right"},
       {"right", 1, 1, Move::kLeft, "left"},
       {"left", 0, 0, Move::kLeft, "left"},
       {"left", 1, 1, Move::kRight, "right"}});
}

inline TMConfig pingpong_start(std::uint32_t m = 3) {
  TMConfig config;
  config.state = 0;
  config.head = 1;
  config.tape.assign(m, 0);
  config.tape.front() = 1;
  config.tape.back() = 1;
  return config;
}

// Every configuration is a fixed point; never halts.
inline ToyTM loop_tm(std::uint32_t m = 2) {
  return ToyTM::build({"spin"}, "spin", {}, m,
                      {{"spin", 0, 0, Move::kStay, "spin"},
                       {"spin", 1, 1, Move::kStay, "spin"}});
}

// Single halting state; every configuration halts immediately.
inline ToyTM halt_tm(std::uint32_t m = 2) {
  return ToyTM::build({"stop"}, "stop", {"stop"}, m, {});
}

// Binary increment: clears carry 1s rightwards, writes the final 1 and
// halts; running off the right wall (overflow) also ends the run.
inline ToyTM counter_tm(std::uint32_t m = 3) {
  return ToyTM::build({"scan", "done"}, "scan", {"done"}, m,
                      {{"scan", 1, 0, Move::kRight, "scan"},
                       {"scan", 0, 1, Move::kStay, "done"}});
}

}  // namespace majnet::testing
