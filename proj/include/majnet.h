/*
 * majnet C API: majority opinion diffusion on directed social networks.
 *
 * All functions return a majnet_status; 0 means success. Output strings
 * are heap-allocated and must be released with majnet_string_free. The
 * textual exchange formats (network/circuit/TM JSON, labelling strings,
 * trace files) are documented in the project README.
 */
#ifndef MAJNET_H
#define MAJNET_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

#if defined(_WIN32)
#define MAJNET_API __declspec(dllexport)
#else
#define MAJNET_API __attribute__((visibility("default")))
#endif

typedef enum majnet_status {
  MAJNET_OK = 0,
  MAJNET_ERROR_VALIDATION = 1, /* input violates a structural invariant */
  MAJNET_ERROR_PARSE = 2,      /* malformed JSON or text format */
  MAJNET_ERROR_REFUSED = 3,    /* request exceeds a configured cap */
  MAJNET_ERROR_IO = 4,
  MAJNET_ERROR_INVALID_ARGUMENT = 5, /* null handle or out pointer */
  MAJNET_ERROR_INTERNAL = 6,
} majnet_status;

/* Opaque validated network handle. */
typedef struct majnet_network majnet_network;

MAJNET_API const char* majnet_version(void);

/* Message for the most recent failure on this thread. */
MAJNET_API const char* majnet_last_error(void);

MAJNET_API void majnet_string_free(char* text);
MAJNET_API void majnet_network_free(majnet_network* net);

/* ---- networks ---- */

MAJNET_API majnet_status majnet_network_from_json(const char* json_text,
                                                  majnet_network** out);
MAJNET_API majnet_status majnet_network_to_json(const majnet_network* net,
                                                char** out_json);
MAJNET_API majnet_status majnet_network_build(uint32_t n,
                                              const uint32_t* edge_pairs,
                                              size_t edge_count,
                                              majnet_network** out);
MAJNET_API uint32_t majnet_network_node_count(const majnet_network* net);
MAJNET_API uint64_t majnet_network_edge_count(const majnet_network* net);

/* Structure report and convergence prediction as JSON. */
MAJNET_API majnet_status majnet_analyze(const majnet_network* net,
                                        char** out_json);

/* ---- dynamics ---- */

/*
 * Runs the synchronous protocol from `labelling` (string over {0,1}).
 * max_steps = 0 means no budget. out_report receives the one-line outcome
 * JSON; out_trace (optional, may be NULL) receives the full trace text.
 */
MAJNET_API majnet_status majnet_simulate(const majnet_network* net,
                                         const char* labelling,
                                         uint64_t max_steps,
                                         char** out_report,
                                         char** out_trace);

/*
 * Searches for a labelling from which the network does not converge.
 * Refuses when the network has more than `max_n` agents. On success
 * *out_witness is the witness labelling string, or NULL when every
 * labelling converges.
 */
MAJNET_API majnet_status majnet_guarantee(const majnet_network* net,
                                          uint32_t max_n, uint32_t jobs,
                                          int deterministic,
                                          char** out_witness);

/* ---- circuit compilation ---- */

/*
 * Compiles circuit JSON into a diffusion network; returns the network
 * JSON and the pair-map JSON.
 */
MAJNET_API majnet_status majnet_compile_circuit(const char* circuit_json,
                                                char** out_network_json,
                                                char** out_map_json);

/* ---- reduction ---- */

/*
 * Assembles the main network for a machine given as TM JSON.
 * start_config is "state,head,tapebits" or a raw n-bit encoding string;
 * NULL means the initial state with head 0 on an all-zero tape.
 * Any of the out parameters may be NULL when not needed.
 */
MAJNET_API majnet_status majnet_reduce(const char* tm_json,
                                       const char* start_config, uint32_t k,
                                       char** out_network_json,
                                       char** out_labelling,
                                       char** out_manifest_json);

/*
 * Assembles and runs the main network from start_config; budget = 0 means
 * none. The verdict JSON reports non-convergence (exact cycle),
 * convergence (steps + constant limit) or budget exhaustion.
 */
MAJNET_API majnet_status majnet_reduce_demo(const char* tm_json,
                                            const char* start_config,
                                            uint32_t k, uint64_t budget,
                                            char** out_verdict_json);

/* ---- export ---- */

/* labelling may be NULL for an unlabelled (grey) rendering. */
MAJNET_API majnet_status majnet_export_dot(const majnet_network* net,
                                           const char* labelling,
                                           char** out_dot);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* MAJNET_H */
