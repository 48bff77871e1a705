#include "majnet.h"

#include <cstring>
#include <new>
#include <string>

#include "majnet/error.hpp"
#include "majnet/serialize.hpp"

using namespace majnet;

struct majnet_network {
  SocialNetwork net;
};

namespace {

thread_local std::string g_last_error;

majnet_status status_of(const Error& e) {
  switch (e.kind()) {
    case ErrorKind::kValidation: return MAJNET_ERROR_VALIDATION;
    case ErrorKind::kParse: return MAJNET_ERROR_PARSE;
    case ErrorKind::kRefusal: return MAJNET_ERROR_REFUSED;
    case ErrorKind::kIo: return MAJNET_ERROR_IO;
    case ErrorKind::kInternal: return MAJNET_ERROR_INTERNAL;
  }
  return MAJNET_ERROR_INTERNAL;
}

template <typename Fn>
majnet_status guarded(Fn&& fn) {
  try {
    fn();
    return MAJNET_OK;
  } catch (const Error& e) {
    g_last_error = e.what();
    return status_of(e);
  } catch (const std::bad_alloc&) {
    g_last_error = "out of memory";
    return MAJNET_ERROR_INTERNAL;
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return MAJNET_ERROR_INTERNAL;
  }
}

char* dup_string(const std::string& text) {
  char* out = new char[text.size() + 1];
  std::memcpy(out, text.c_str(), text.size() + 1);
  return out;
}

majnet_status invalid_argument(const char* message) {
  g_last_error = message;
  return MAJNET_ERROR_INVALID_ARGUMENT;
}

// "state,head,tapebits" or a raw config_bits()-long encoding string;
// nullptr = initial state, head 0, all-zero tape.
TMConfig parse_start_config(const ToyTM& tm, const char* text) {
  if (text == nullptr) {
    return TMConfig{tm.initial_state(), 0, Bits(tm.tape_len(), 0)};
  }
  std::string s(text);
  if (s.find(',') == std::string::npos) {
    if (s.size() != tm.config_bits()) {
      fail_parse("start config string must be STATE,HEAD,TAPE or a " +
                 std::to_string(tm.config_bits()) + "-bit encoding");
    }
    Bits bits;
    for (char c : s) {
      if (c != '0' && c != '1') fail_parse("encoding must be over {0,1}");
      bits.push_back(c == '1');
    }
    auto config = decode_config(tm, bits);
    if (!config) fail_parse("encoding is not a valid configuration");
    return *config;
  }
  std::size_t first = s.find(','), second = s.find(',', first + 1);
  if (second == std::string::npos) {
    fail_parse("start config must be STATE,HEAD,TAPE");
  }
  std::string state = s.substr(0, first);
  std::string head = s.substr(first + 1, second - first - 1);
  std::string tape = s.substr(second + 1);
  TMConfig config;
  config.state = tm.state_index(state);
  try {
    config.head = static_cast<std::uint32_t>(std::stoul(head));
  } catch (...) {
    fail_parse("head must be a non-negative integer");
  }
  if (config.head >= tm.tape_len()) fail_parse("head position out of range");
  if (tape.size() != tm.tape_len()) {
    fail_parse("tape must have exactly " + std::to_string(tm.tape_len()) +
               " bits");
  }
  for (char c : tape) {
    if (c != '0' && c != '1') fail_parse("tape must be over {0,1}");
    config.tape.push_back(c == '1');
  }
  return config;
}

}  // namespace

extern "C" {

const char* majnet_version(void) { return "1.0.0"; }

const char* majnet_last_error(void) { return g_last_error.c_str(); }

void majnet_string_free(char* text) { delete[] text; }

void majnet_network_free(majnet_network* net) { delete net; }

majnet_status majnet_network_from_json(const char* json_text,
                                       majnet_network** out) {
  if (!json_text || !out) return invalid_argument("null argument");
  return guarded([&] {
    *out = new majnet_network{network_from_json(json_text)};
  });
}

majnet_status majnet_network_to_json(const majnet_network* net,
                                     char** out_json) {
  if (!net || !out_json) return invalid_argument("null argument");
  return guarded([&] { *out_json = dup_string(network_to_json(net->net)); });
}

majnet_status majnet_network_build(uint32_t n, const uint32_t* edge_pairs,
                                   size_t edge_count, majnet_network** out) {
  if (!out || (edge_count > 0 && !edge_pairs)) {
    return invalid_argument("null argument");
  }
  return guarded([&] {
    std::vector<Edge> edges;
    edges.reserve(edge_count);
    for (size_t i = 0; i < edge_count; ++i) {
      edges.push_back({edge_pairs[2 * i], edge_pairs[2 * i + 1]});
    }
    *out = new majnet_network{SocialNetwork::build(n, std::move(edges))};
  });
}

uint32_t majnet_network_node_count(const majnet_network* net) {
  return net ? net->net.node_count() : 0;
}

uint64_t majnet_network_edge_count(const majnet_network* net) {
  return net ? net->net.edge_count() : 0;
}

majnet_status majnet_analyze(const majnet_network* net, char** out_json) {
  if (!net || !out_json) return invalid_argument("null argument");
  return guarded([&] {
    StructureReport report = analyze(net->net);
    ConvergencePrediction prediction = predict_convergence(report);
    *out_json = dup_string(report_to_json(report, prediction));
  });
}

majnet_status majnet_simulate(const majnet_network* net, const char* labelling,
                              uint64_t max_steps, char** out_report,
                              char** out_trace) {
  if (!net || !labelling || !out_report) {
    return invalid_argument("null argument");
  }
  return guarded([&] {
    Labelling start = Labelling::from_string(labelling);
    RunOptions options;
    if (max_steps > 0) options.max_steps = max_steps;
    options.record_trajectory = out_trace != nullptr;
    RunResult result = run(net->net, start, options);
    *out_report = dup_string(outcome_to_json(result.outcome));
    if (out_trace) {
      if (result.trajectory) {
        *out_trace = dup_string(
            trace_to_text(*result.trajectory, result.outcome));
      } else {
        *out_trace = dup_string(outcome_to_json(result.outcome) + "\n");
      }
    }
  });
}

majnet_status majnet_guarantee(const majnet_network* net, uint32_t max_n,
                               uint32_t jobs, int deterministic,
                               char** out_witness) {
  if (!net || !out_witness) return invalid_argument("null argument");
  return guarded([&] {
    GuaranteeOptions options;
    if (max_n > 0) options.exhaustive_cap = max_n;
    options.jobs = jobs == 0 ? 1 : jobs;
    options.deterministic = deterministic != 0;
    auto witness = guarantee_search(net->net, options);
    *out_witness = witness ? dup_string(witness->to_string()) : nullptr;
  });
}

majnet_status majnet_compile_circuit(const char* circuit_json,
                                     char** out_network_json,
                                     char** out_map_json) {
  if (!circuit_json || !out_network_json || !out_map_json) {
    return invalid_argument("null argument");
  }
  return guarded([&] {
    Circuit circuit = circuit_from_json(circuit_json);
    CompiledCircuit cc = compile(layerize(circuit));
    *out_network_json = dup_string(network_to_json(cc.network));
    *out_map_json = dup_string(compile_map_to_json(cc));
  });
}

majnet_status majnet_reduce(const char* tm_json, const char* start_config,
                            uint32_t k, char** out_network_json,
                            char** out_labelling, char** out_manifest_json) {
  if (!tm_json) return invalid_argument("null argument");
  return guarded([&] {
    ToyTM tm = tm_from_json(tm_json);
    MainNetwork mn = assemble_main_network(tm, k == 0 ? 2 : k);
    if (out_network_json) {
      *out_network_json = dup_string(network_to_json(mn.network));
    }
    if (out_labelling) {
      TMConfig start = parse_start_config(tm, start_config);
      Labelling f = initial_labelling(mn, start);
      *out_labelling = dup_string(f.to_string());
    }
    if (out_manifest_json) {
      *out_manifest_json = dup_string(manifest_to_json(mn));
    }
  });
}

majnet_status majnet_reduce_demo(const char* tm_json, const char* start_config,
                                 uint32_t k, uint64_t budget,
                                 char** out_verdict_json) {
  if (!tm_json || !out_verdict_json) return invalid_argument("null argument");
  return guarded([&] {
    ToyTM tm = tm_from_json(tm_json);
    TMConfig start = parse_start_config(tm, start_config);
    std::optional<std::uint64_t> steps;
    if (budget > 0) steps = budget;
    ReductionVerdict verdict =
        run_reduction_demo(tm, start, k == 0 ? 2 : k, steps);
    std::string json;
    switch (verdict.kind) {
      case ReductionVerdict::Kind::kNonConvergent:
        json = "{\"verdict\":\"non_convergent\",\"preperiod\":" +
               std::to_string(verdict.preperiod) +
               ",\"period\":" + std::to_string(verdict.period) + "}";
        break;
      case ReductionVerdict::Kind::kConvergent:
        json = "{\"verdict\":\"convergent\",\"steps\":" +
               std::to_string(verdict.steps) + ",\"limit_constant\":" +
               (verdict.limit_constant ? "true" : "false") +
               ",\"limit_value\":" + (verdict.limit_value ? "1" : "0") + "}";
        break;
      case ReductionVerdict::Kind::kUndetermined:
        json = "{\"verdict\":\"undetermined\",\"budget\":" +
               std::to_string(verdict.budget) + "}";
        break;
    }
    *out_verdict_json = dup_string(json);
  });
}

majnet_status majnet_export_dot(const majnet_network* net,
                                const char* labelling, char** out_dot) {
  if (!net || !out_dot) return invalid_argument("null argument");
  return guarded([&] {
    if (labelling) {
      Labelling f = Labelling::from_string(labelling);
      *out_dot = dup_string(network_to_dot(net->net, &f));
    } else {
      *out_dot = dup_string(network_to_dot(net->net, nullptr));
    }
  });
}

}  // extern "C"
