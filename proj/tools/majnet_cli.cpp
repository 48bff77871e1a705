// Command-line front end for the majnet shared library. Talks to the
// library exclusively through the C API.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "majnet.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitError = 1;
constexpr int kExitValidation = 2;
constexpr int kExitRefusal = 3;
constexpr int kExitIo = 4;

int exit_code_of(majnet_status status) {
  switch (status) {
    case MAJNET_OK: return kExitOk;
    case MAJNET_ERROR_VALIDATION:
    case MAJNET_ERROR_PARSE: return kExitValidation;
    case MAJNET_ERROR_REFUSED: return kExitRefusal;
    case MAJNET_ERROR_IO: return kExitIo;
    default: return kExitError;
  }
}

[[noreturn]] void die(majnet_status status) {
  std::cerr << "error: " << majnet_last_error() << "\n";
  std::exit(exit_code_of(status));
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    std::cerr << "error: cannot open " << path << "\n";
    std::exit(kExitIo);
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    std::cerr << "error: cannot write " << path << "\n";
    std::exit(kExitIo);
  }
  out << content;
}

struct StringGuard {
  char* value = nullptr;
  ~StringGuard() { majnet_string_free(value); }
};

struct NetworkGuard {
  majnet_network* net = nullptr;
  ~NetworkGuard() { majnet_network_free(net); }
};

majnet_network* load_network(const std::string& path) {
  std::string text = read_file(path);
  majnet_network* net = nullptr;
  majnet_status status = majnet_network_from_json(text.c_str(), &net);
  if (status != MAJNET_OK) die(status);
  return net;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"majority opinion diffusion toolkit"};
  app.require_subcommand(1);

  // validate
  std::string validate_path;
  auto* validate = app.add_subcommand(
      "validate", "Parse and validate a network JSON file");
  validate->add_option("network", validate_path, "network JSON file")
      ->required();

  // simulate
  std::string sim_path, sim_labelling, sim_trace_out;
  std::uint64_t sim_steps = 0;
  auto* simulate = app.add_subcommand(
      "simulate", "Run the synchronous protocol from a labelling");
  simulate->add_option("network", sim_path, "network JSON file")->required();
  simulate->add_option("labelling", sim_labelling, "labelling string over {0,1}")
      ->required();
  simulate->add_option("--steps", sim_steps,
                       "step budget (0 = run to a verdict)");
  simulate->add_option("--trace-out", sim_trace_out,
                       "write the labelling-per-line trace here");

  // guarantee
  std::string grt_path;
  std::uint32_t grt_max_n = 24, grt_jobs = 1;
  bool grt_deterministic = false;
  auto* guarantee = app.add_subcommand(
      "guarantee", "Search for a labelling that does not converge");
  guarantee->add_option("network", grt_path, "network JSON file")->required();
  guarantee->add_option("--max-n", grt_max_n,
                        "refuse networks larger than this (default 24)");
  guarantee->add_option("--jobs", grt_jobs, "parallel workers (default 1)");
  guarantee->add_flag("--deterministic", grt_deterministic,
                      "always report the smallest-value witness");

  // analyze
  std::string ana_path;
  auto* analyze = app.add_subcommand(
      "analyze", "Structural report and convergence prediction");
  analyze->add_option("network", ana_path, "network JSON file")->required();

  // compile
  std::string cmp_path, cmp_out, cmp_map;
  auto* compile = app.add_subcommand(
      "compile", "Compile a circuit JSON file into a diffusion network");
  compile->add_option("circuit", cmp_path, "circuit JSON file")->required();
  compile->add_option("-o,--output", cmp_out, "network JSON output path")
      ->required();
  compile->add_option("--map", cmp_map, "pair-map JSON output path");

  // reduce
  std::string red_path, red_start, red_out, red_labelling, red_manifest;
  std::uint32_t red_k = 2;
  std::uint64_t red_budget = 0;
  bool red_demo = false;
  auto* reduce = app.add_subcommand(
      "reduce", "Assemble the main network for a Turing machine JSON file");
  reduce->add_option("tm", red_path, "TM JSON file")->required();
  reduce->add_option("--start", red_start,
                     "start configuration STATE,HEAD,TAPE or raw encoding");
  reduce->add_option("-o,--output", red_out, "network JSON output path");
  reduce->add_option("--labelling", red_labelling,
                     "write the initial labelling here");
  reduce->add_option("--manifest", red_manifest, "manifest JSON output path");
  reduce->add_option("-k", red_k, "alarm size parameter (default 2)");
  reduce->add_flag("--demo", red_demo, "run the assembled network");
  reduce->add_option("--budget", red_budget, "step budget for --demo");

  // export-dot
  std::string dot_path, dot_labelling, dot_out;
  auto* export_dot = app.add_subcommand(
      "export-dot", "Render a network as Graphviz DOT");
  export_dot->add_option("network", dot_path, "network JSON file")->required();
  export_dot->add_option("--labelling", dot_labelling,
                         "colour nodes by this labelling");
  export_dot->add_option("-o,--output", dot_out,
                         "output path (default stdout)");

  CLI11_PARSE(app, argc, argv);

  if (validate->parsed()) {
    NetworkGuard net{load_network(validate_path)};
    std::cout << "OK: " << majnet_network_node_count(net.net) << " nodes, "
              << majnet_network_edge_count(net.net) << " edges\n";
    return kExitOk;
  }

  if (simulate->parsed()) {
    NetworkGuard net{load_network(sim_path)};
    StringGuard report, trace;
    majnet_status status = majnet_simulate(
        net.net, sim_labelling.c_str(), sim_steps, &report.value,
        sim_trace_out.empty() ? nullptr : &trace.value);
    if (status != MAJNET_OK) die(status);
    if (!sim_trace_out.empty()) write_file(sim_trace_out, trace.value);
    std::cout << report.value << "\n";
    return kExitOk;
  }

  if (guarantee->parsed()) {
    NetworkGuard net{load_network(grt_path)};
    StringGuard witness;
    majnet_status status =
        majnet_guarantee(net.net, grt_max_n, grt_jobs,
                         grt_deterministic ? 1 : 0, &witness.value);
    if (status != MAJNET_OK) die(status);
    if (witness.value) {
      std::cout << "non-convergent from: " << witness.value << "\n";
    } else {
      std::cout << "all labellings converge\n";
    }
    return kExitOk;
  }

  if (analyze->parsed()) {
    NetworkGuard net{load_network(ana_path)};
    StringGuard report;
    majnet_status status = majnet_analyze(net.net, &report.value);
    if (status != MAJNET_OK) die(status);
    std::cout << report.value << "\n";
    return kExitOk;
  }

  if (compile->parsed()) {
    std::string circuit = read_file(cmp_path);
    StringGuard network_json, map_json;
    majnet_status status = majnet_compile_circuit(
        circuit.c_str(), &network_json.value, &map_json.value);
    if (status != MAJNET_OK) die(status);
    write_file(cmp_out, std::string(network_json.value) + "\n");
    if (!cmp_map.empty()) {
      write_file(cmp_map, std::string(map_json.value) + "\n");
    }
    std::cout << map_json.value << "\n";
    return kExitOk;
  }

  if (reduce->parsed()) {
    std::string tm = read_file(red_path);
    const char* start = red_start.empty() ? nullptr : red_start.c_str();
    StringGuard network_json, labelling, manifest;
    majnet_status status = majnet_reduce(
        tm.c_str(), start, red_k,
        red_out.empty() ? nullptr : &network_json.value,
        red_labelling.empty() ? nullptr : &labelling.value, &manifest.value);
    if (status != MAJNET_OK) die(status);
    if (!red_out.empty()) {
      write_file(red_out, std::string(network_json.value) + "\n");
    }
    if (!red_labelling.empty()) {
      write_file(red_labelling, std::string(labelling.value) + "\n");
    }
    if (!red_manifest.empty()) {
      write_file(red_manifest, std::string(manifest.value) + "\n");
    }
    std::cout << manifest.value << "\n";
    if (red_demo) {
      StringGuard verdict;
      status = majnet_reduce_demo(tm.c_str(), start, red_k, red_budget,
                                  &verdict.value);
      if (status != MAJNET_OK) die(status);
      std::cout << verdict.value << "\n";
    }
    return kExitOk;
  }

  if (export_dot->parsed()) {
    NetworkGuard net{load_network(dot_path)};
    StringGuard dot;
    majnet_status status = majnet_export_dot(
        net.net, dot_labelling.empty() ? nullptr : dot_labelling.c_str(),
        &dot.value);
    if (status != MAJNET_OK) die(status);
    if (dot_out.empty()) {
      std::cout << dot.value;
    } else {
      write_file(dot_out, dot.value);
    }
    return kExitOk;
  }

  return kExitError;
}
