/*
 * divgraph C API.
 *
 * The library builds the bipartite divisor graph B(X), the prime vertex
 * graph Delta(X) and the common divisor graph Gamma(X) of a finite set X of
 * positive integers, realizes bipartite graphs as B(X), and checks the
 * structural relations between the three graphs on concrete instances.
 *
 * Conventions:
 *   - every function returns a dg_status; outputs are written through
 *     pointer parameters only on DG_OK;
 *   - strings returned through char** are heap-allocated and must be
 *     released with dg_string_free;
 *   - handles are opaque and freed with their dedicated _free function;
 *   - dg_last_error() returns a thread-local description of the most
 *     recent failure.
 *
 * Integers are passed as decimal strings because values are unbounded.
 */

#ifndef DIVGRAPH_DIVGRAPH_H
#define DIVGRAPH_DIVGRAPH_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum dg_status {
  DG_OK = 0,
  DG_ERROR_PARSE = 1,            /* malformed integer list or graph file */
  DG_ERROR_EMPTY_OR_TRIVIAL = 2, /* X empty or equal to {1} */
  DG_ERROR_BUDGET_EXCEEDED = 3,  /* factorization ran past the trial bound */
  DG_ERROR_ISOLATED_VERTEX = 4,  /* graph cannot be realized */
  DG_ERROR_UNKNOWN_VERTEX = 5,
  DG_ERROR_INVALID_ARGUMENT = 6,
  DG_ERROR_INTERNAL = 7,
} dg_status;

/* Static name of a status code, e.g. "DG_ERROR_PARSE". */
const char* dg_status_name(dg_status status);

/* Thread-local message describing the most recent error in this thread. */
const char* dg_last_error(void);

void dg_string_free(char* text);

/* ---- integer sets -------------------------------------------------- */

typedef struct dg_integer_set dg_integer_set;

/* Parses comma- or whitespace-separated positive decimal integers.
 * Duplicates are dropped; 1 is accepted and excluded from X*. */
dg_status dg_integer_set_parse(const char* text, dg_integer_set** out);
void dg_integer_set_free(dg_integer_set* set);

/* rho(X), X*, and B/Delta/Gamma with vertex tags, as one JSON document. */
dg_status dg_build_json(const dg_integer_set* set, char** json_out);

/* DOT text of one graph; which is "B", "delta" or "gamma". */
dg_status dg_graph_dot(const dg_integer_set* set, const char* which, char** dot_out);

/* Component counts, diameters, girths and girth_gt4 as JSON. */
dg_status dg_analyze_json(const dg_integer_set* set, char** json_out);

/* Triangle and K4 diagnoses as JSON. */
dg_status dg_patterns_json(const dg_integer_set* set, char** json_out);

/* The Corollary-1 dual set Y with the isomorphism maps, as JSON. */
dg_status dg_dualize_json(const dg_integer_set* set, char** json_out);

/* Runs every theorem check on X (Inc conditions once per entry of ells;
 * pass NULL/0 for the default {3, 4}). Writes one JSON report per line.
 * all_passed receives 1 when every check passed. */
dg_status dg_verify_json(const dg_integer_set* set, const uint32_t* ells, size_t ell_count,
                         int* all_passed, char** jsonl_out);

/* ---- bipartitioned graphs ------------------------------------------ */

typedef struct dg_bigraph dg_bigraph;

/* Text format: first line "parts: v1 v2 ... | u1 u2 ...", then one "v u"
 * edge per line; '#' starts a comment line. */
dg_status dg_bigraph_parse(const char* text, dg_bigraph** out);
void dg_bigraph_free(dg_bigraph* graph);

/* Theorem-1.1 realization: X and the vertex-to-prime / vertex-to-number
 * maps as JSON. Fails with DG_ERROR_ISOLATED_VERTEX when no realization
 * exists. */
dg_status dg_realize_json(const dg_bigraph* graph, char** json_out);

/* ---- fuzz driver ---------------------------------------------------- */

/* Runs the seeded random theorem suite. Emits JSON lines: failed reports
 * (all reports when all_reports is nonzero) followed by a summary object.
 * all_passed receives 1 when no report failed. */
dg_status dg_fuzz_json(uint64_t trials, uint64_t seed, uint32_t max_set_size,
                       uint64_t max_element, const uint32_t* ells, size_t ell_count,
                       int all_reports, int* all_passed, char** jsonl_out);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* DIVGRAPH_DIVGRAPH_H */
