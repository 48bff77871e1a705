#include "majnet/serialize.hpp"

#include <sstream>

#include "json.hpp"
#include "majnet/error.hpp"

namespace majnet {

using nlohmann::json;

namespace {

json parse_json(const std::string& text) {
  json j = json::parse(text, nullptr, false);
  if (j.is_discarded()) fail_parse("malformed JSON");
  return j;
}

NodeId to_node(const json& j, const char* what) {
  if (!j.is_number_unsigned()) {
    fail_parse(std::string(what) + " must be a non-negative integer");
  }
  return j.get<NodeId>();
}

NodePair to_pair(const json& j, const char* what) {
  if (!j.is_array() || j.size() != 2) {
    fail_parse(std::string(what) + " must be a [a,b] pair");
  }
  return NodePair{to_node(j[0], what), to_node(j[1], what)};
}

json pair_to_json(const NodePair& p) { return json::array({p.first, p.second}); }

}  // namespace

SocialNetwork network_from_json(const std::string& text) {
  json j = parse_json(text);
  if (!j.is_object() || !j.contains("n") || !j.contains("edges")) {
    fail_parse("network JSON needs \"n\" and \"edges\"");
  }
  NodeId n = to_node(j["n"], "n");
  std::vector<Edge> edges;
  for (const json& e : j["edges"]) {
    NodePair p = to_pair(e, "edge");
    edges.push_back({p.first, p.second});
  }
  Annotations annotations;
  if (j.contains("annotations")) {
    const json& a = j["annotations"];
    if (!a.is_object()) fail_parse("annotations must be an object");
    if (a.contains("dual_pairs")) {
      for (const json& p : a["dual_pairs"]) {
        annotations.dual_pairs.push_back(to_pair(p, "dual pair"));
      }
    }
    if (a.contains("base_pair")) {
      annotations.base_pair = to_pair(a["base_pair"], "base pair");
    }
    if (a.contains("fuse_pairs")) {
      for (const json& p : a["fuse_pairs"]) {
        annotations.fuse_pairs.push_back(to_pair(p, "fuse pair"));
      }
    }
    if (a.contains("valve")) {
      const json& v = a["valve"];
      if (!v.is_object() || !v.contains("P") || !v.contains("Q")) {
        fail_parse("valve must be {\"P\":[a,b],\"Q\":[a,b]}");
      }
      annotations.valve_p = to_pair(v["P"], "valve P");
      annotations.valve_q = to_pair(v["Q"], "valve Q");
    }
    if (a.contains("alarm")) {
      for (const json& id : a["alarm"]) {
        annotations.alarm.push_back(to_node(id, "alarm node"));
      }
    }
  }
  return SocialNetwork::build(n, std::move(edges), std::move(annotations));
}

std::string network_to_json(const SocialNetwork& net) {
  json j;
  j["n"] = net.node_count();
  json edges = json::array();
  for (const auto& [u, v] : net.edges()) edges.push_back(json::array({u, v}));
  j["edges"] = std::move(edges);
  const Annotations& a = net.annotations();
  if (!a.empty()) {
    json ann = json::object();
    if (!a.dual_pairs.empty()) {
      json pairs = json::array();
      for (const NodePair& p : a.dual_pairs) pairs.push_back(pair_to_json(p));
      ann["dual_pairs"] = std::move(pairs);
    }
    if (a.base_pair) ann["base_pair"] = pair_to_json(*a.base_pair);
    if (!a.fuse_pairs.empty()) {
      json pairs = json::array();
      for (const NodePair& p : a.fuse_pairs) pairs.push_back(pair_to_json(p));
      ann["fuse_pairs"] = std::move(pairs);
    }
    if (a.valve_p && a.valve_q) {
      ann["valve"] = {{"P", pair_to_json(*a.valve_p)},
                      {"Q", pair_to_json(*a.valve_q)}};
    }
    if (!a.alarm.empty()) ann["alarm"] = a.alarm;
    j["annotations"] = std::move(ann);
  }
  return j.dump();
}

namespace {

GateOp op_from_string(const std::string& name) {
  if (name == "AND") return GateOp::kAnd;
  if (name == "OR") return GateOp::kOr;
  if (name == "NOT") return GateOp::kNot;
  if (name == "NOP") return GateOp::kNop;
  if (name == "CONST_TRUE") return GateOp::kConstTrue;
  if (name == "CONST_FALSE") return GateOp::kConstFalse;
  fail_parse("unknown gate op " + name);
}

const char* op_to_string(GateOp op) {
  switch (op) {
    case GateOp::kAnd: return "AND";
    case GateOp::kOr: return "OR";
    case GateOp::kNot: return "NOT";
    case GateOp::kNop: return "NOP";
    case GateOp::kConstTrue: return "CONST_TRUE";
    case GateOp::kConstFalse: return "CONST_FALSE";
  }
  return "NOP";
}

Ref ref_from_json(const json& j) {
  if (j.is_object() && j.contains("input")) {
    return Ref::input(to_node(j["input"], "input ref"));
  }
  if (j.is_object() && j.contains("gate")) {
    return Ref::gate(to_node(j["gate"], "gate ref"));
  }
  fail_parse("ref must be {\"input\": j} or {\"gate\": i}");
}

json ref_to_json(const Ref& ref) {
  json j;
  if (ref.kind == Ref::Kind::kInput) {
    j["input"] = ref.index;
  } else {
    j["gate"] = ref.index;
  }
  return j;
}

}  // namespace

Circuit circuit_from_json(const std::string& text) {
  json j = parse_json(text);
  if (!j.is_object() || !j.contains("inputs")) {
    fail_parse("circuit JSON needs \"inputs\"");
  }
  Circuit circuit;
  circuit.input_count = to_node(j["inputs"], "inputs");
  if (j.contains("gates")) {
    for (const json& g : j["gates"]) {
      if (!g.is_object() || !g.contains("id") || !g.contains("op")) {
        fail_parse("gate needs \"id\" and \"op\"");
      }
      std::uint32_t id = to_node(g["id"], "gate id");
      if (id != circuit.gates.size()) {
        fail_parse("gate ids must be dense and in order");
      }
      Gate gate;
      gate.op = op_from_string(g["op"].get<std::string>());
      if (g.contains("args")) {
        for (const json& a : g["args"]) gate.args.push_back(ref_from_json(a));
      }
      circuit.gates.push_back(std::move(gate));
    }
  }
  if (j.contains("outputs")) {
    for (const json& o : j["outputs"]) {
      circuit.outputs.push_back(ref_from_json(o));
    }
  }
  circuit.validate();
  return circuit;
}

std::string circuit_to_json(const Circuit& circuit) {
  json j;
  j["inputs"] = circuit.input_count;
  json gates = json::array();
  for (std::size_t g = 0; g < circuit.gates.size(); ++g) {
    json gate;
    gate["id"] = g;
    gate["op"] = op_to_string(circuit.gates[g].op);
    json args = json::array();
    for (const Ref& ref : circuit.gates[g].args) args.push_back(ref_to_json(ref));
    gate["args"] = std::move(args);
    gates.push_back(std::move(gate));
  }
  j["gates"] = std::move(gates);
  json outputs = json::array();
  for (const Ref& ref : circuit.outputs) outputs.push_back(ref_to_json(ref));
  j["outputs"] = std::move(outputs);
  return j.dump();
}

namespace {

json dual_pair_to_json(const DualPair& p) {
  return json::array({p.true_rail, p.false_rail});
}

json dual_pairs_to_json(const std::vector<DualPair>& pairs) {
  json out = json::array();
  for (const DualPair& p : pairs) out.push_back(dual_pair_to_json(p));
  return out;
}

}  // namespace

std::string compile_map_to_json(const CompiledCircuit& cc) {
  json j;
  j["base_pair"] = dual_pair_to_json(cc.base.pair);
  j["input_pairs"] = dual_pairs_to_json(cc.input_pairs);
  j["output_pairs"] = dual_pairs_to_json(cc.output_pairs);
  j["h"] = cc.depth;
  return j.dump();
}

ToyTM tm_from_json(const std::string& text) {
  json j = parse_json(text);
  if (!j.is_object() || !j.contains("states") || !j.contains("initial") ||
      !j.contains("tape_len")) {
    fail_parse("TM JSON needs \"states\", \"initial\" and \"tape_len\"");
  }
  std::vector<std::string> states;
  for (const json& s : j["states"]) states.push_back(s.get<std::string>());
  std::vector<std::string> halting;
  if (j.contains("halting")) {
    for (const json& s : j["halting"]) halting.push_back(s.get<std::string>());
  }
  std::vector<TransitionRule> rules;
  if (j.contains("delta")) {
    for (const json& r : j["delta"]) {
      TransitionRule rule;
      rule.state = r.at("state").get<std::string>();
      rule.read = static_cast<std::uint8_t>(to_node(r.at("read"), "read"));
      rule.write = static_cast<std::uint8_t>(to_node(r.at("write"), "write"));
      std::string move = r.at("move").get<std::string>();
      if (move == "L") {
        rule.move = Move::kLeft;
      } else if (move == "R") {
        rule.move = Move::kRight;
      } else if (move == "S") {
        rule.move = Move::kStay;
      } else {
        fail_parse("move must be \"L\", \"R\" or \"S\"");
      }
      rule.next = r.at("next").get<std::string>();
      rules.push_back(std::move(rule));
    }
  }
  return ToyTM::build(std::move(states), j["initial"].get<std::string>(),
                      halting, to_node(j["tape_len"], "tape_len"), rules);
}

std::string tm_to_json(const ToyTM& tm) {
  json j;
  j["states"] = tm.state_names();
  j["initial"] = tm.state_name(tm.initial_state());
  json halting = json::array();
  for (std::uint32_t q = 0; q < tm.state_count(); ++q) {
    if (tm.is_halting(q)) halting.push_back(tm.state_name(q));
  }
  j["halting"] = std::move(halting);
  j["tape_len"] = tm.tape_len();
  json delta = json::array();
  for (std::uint32_t q = 0; q < tm.state_count(); ++q) {
    if (tm.is_halting(q)) continue;
    for (std::uint8_t rd = 0; rd < 2; ++rd) {
      const Transition& t = tm.transition(q, rd);
      const char* move = t.move == Move::kLeft    ? "L"
                         : t.move == Move::kRight ? "R"
                                                  : "S";
      delta.push_back({{"state", tm.state_name(q)},
                       {"read", rd},
                       {"write", t.write},
                       {"move", move},
                       {"next", tm.state_name(t.next)}});
    }
  }
  j["delta"] = std::move(delta);
  return j.dump();
}

std::string manifest_to_json(const MainNetwork& mn) {
  json j;
  j["h"] = mn.depth;
  j["k"] = mn.k;
  j["n_config"] = mn.tm.config_bits();
  json pair_map;
  pair_map["base_pair"] = dual_pair_to_json(mn.base.pair);
  pair_map["input_pairs"] = dual_pairs_to_json(mn.input_pairs);
  pair_map["dual_pairs"] = dual_pairs_to_json(mn.dual_pairs);
  pair_map["halt_pair"] = dual_pair_to_json(mn.halt_pair);
  json fuse = json::array();
  for (const NodePair& p : mn.fuse.pairs) fuse.push_back(pair_to_json(p));
  pair_map["fuse_pairs"] = std::move(fuse);
  pair_map["valve"] = {{"P", pair_to_json(mn.valve_p)},
                       {"Q", pair_to_json(mn.valve_q)}};
  pair_map["alarm"] = mn.alarm;
  j["pair_map"] = std::move(pair_map);
  std::uint32_t max_in = 0;
  for (NodeId v = 0; v < mn.network.node_count(); ++v) {
    max_in = std::max(max_in, mn.network.in_degree(v));
  }
  j["nodes"] = mn.network.node_count();
  j["edges"] = mn.network.edge_count();
  j["max_in_degree"] = max_in;
  return j.dump();
}

std::string outcome_to_json(const ConvergenceOutcome& outcome) {
  json j;
  if (const auto* converged = std::get_if<Converged>(&outcome)) {
    j["outcome"] = "converged";
    j["steps"] = converged->steps;
    j["limit"] = converged->limit.to_string();
  } else if (const auto* cycles = std::get_if<Cycles>(&outcome)) {
    j["outcome"] = "cycle";
    j["preperiod"] = cycles->preperiod;
    j["period"] = cycles->period;
  } else {
    j["outcome"] = "undetermined";
    j["budget"] = std::get<Undetermined>(outcome).budget;
  }
  return j.dump();
}

std::string trace_to_text(const Trajectory& trajectory,
                          const ConvergenceOutcome& outcome) {
  std::ostringstream out;
  for (const Labelling& state : trajectory.states) {
    out << state.to_string() << '\n';
  }
  out << outcome_to_json(outcome) << '\n';
  return out.str();
}

std::string report_to_json(const StructureReport& report,
                           const ConvergencePrediction& prediction) {
  json j;
  j["is_dag"] = report.is_dag;
  if (report.longest_path) j["longest_path"] = *report.longest_path;
  j["scc_count"] = report.scc_count;
  j["scc_membership"] = report.scc_membership;
  j["is_clique"] = report.is_clique;
  if (report.parity) {
    j["parity"] = *report.parity == Parity::kOdd ? "odd" : "even";
  }
  j["max_in_degree"] = report.max_in_degree;
  json p;
  switch (prediction.kind) {
    case ConvergencePrediction::Kind::kAlwaysConverges:
      p["kind"] = "always_converges";
      if (prediction.bound) p["bound"] = *prediction.bound;
      break;
    case ConvergencePrediction::Kind::kNotAlwaysConverges:
      p["kind"] = "not_always_converges";
      p["witness_hint"] = prediction.witness_hint;
      break;
    case ConvergencePrediction::Kind::kUnknown:
      p["kind"] = "unknown";
      break;
  }
  j["prediction"] = std::move(p);
  return j.dump();
}

std::string network_to_dot(const SocialNetwork& net,
                           const Labelling* labelling) {
  if (labelling && labelling->size() != net.node_count()) {
    fail_validation("dot export: labelling length mismatch");
  }
  const Annotations& a = net.annotations();
  std::vector<const char*> shape(net.node_count(), nullptr);
  auto shape_pair = [&](const NodePair& p, const char* s) {
    shape[p.first] = s;
    shape[p.second] = s;
  };
  for (const NodePair& p : a.dual_pairs) shape_pair(p, "ellipse");
  if (a.base_pair) shape_pair(*a.base_pair, "doublecircle");
  for (const NodePair& p : a.fuse_pairs) shape_pair(p, "box");
  if (a.valve_p) shape_pair(*a.valve_p, "diamond");
  if (a.valve_q) shape_pair(*a.valve_q, "diamond");
  for (NodeId id : a.alarm) shape[id] = "octagon";

  std::ostringstream out;
  out << "digraph network {\n  node [style=filled];\n";
  for (NodeId v = 0; v < net.node_count(); ++v) {
    out << "  " << v << " [";
    if (labelling) {
      out << (labelling->get(v) ? "fillcolor=black fontcolor=white"
                                : "fillcolor=white");
    } else {
      out << "fillcolor=gray";
    }
    if (shape[v]) out << " shape=" << shape[v];
    out << "];\n";
  }
  for (const auto& [u, v] : net.edges()) {
    out << "  " << u << " -> " << v << ";\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace majnet
