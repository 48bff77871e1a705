#pragma once

#include <string>

#include "majnet/circuit.hpp"
#include "majnet/dynamics.hpp"
#include "majnet/network.hpp"
#include "majnet/reduction.hpp"

namespace majnet {

// Network JSON: {"n": <int>, "edges": [[u,v],...], "annotations": {...}?}
// where [u,v] means u influences v. Parsing runs full validation.
SocialNetwork network_from_json(const std::string& text);
std::string network_to_json(const SocialNetwork& net);

// Circuit JSON: {"inputs": k, "gates": [{"id": i, "op": ..., "args":
// [{"input": j} | {"gate": i}]}], "outputs": [refs]}. Gate ids must be
// dense and in order.
Circuit circuit_from_json(const std::string& text);
std::string circuit_to_json(const Circuit& circuit);

// Compile map JSON: {"base_pair":[a,b], "input_pairs":..., "output_pairs":
// ..., "h":h}.
std::string compile_map_to_json(const CompiledCircuit& cc);

// TM JSON: {"states":[...], "initial": s, "halting":[...], "tape_len": m,
// "delta":[{"state":s,"read":0|1,"write":0|1,"move":"L"|"R"|"S","next":s}]}
ToyTM tm_from_json(const std::string& text);
std::string tm_to_json(const ToyTM& tm);

// Manifest emitted next to an assembled network.
std::string manifest_to_json(const MainNetwork& mn);

// One-line outcome report, e.g. {"outcome":"converged","steps":T,
// "limit":"..."} or {"outcome":"cycle","preperiod":p,"period":q} or
// {"outcome":"undetermined","budget":B}.
std::string outcome_to_json(const ConvergenceOutcome& outcome);

// Trace file: one labelling string per line (line t = time t) followed by
// the outcome report line.
std::string trace_to_text(const Trajectory& trajectory,
                          const ConvergenceOutcome& outcome);

// Structure report plus prediction as JSON.
std::string report_to_json(const StructureReport& report,
                           const ConvergencePrediction& prediction);

// DOT text; labelled nodes are filled black (1) or white (0), unlabelled
// ones grey. Role annotations select node shapes.
std::string network_to_dot(const SocialNetwork& net,
                           const Labelling* labelling);

}  // namespace majnet
