#ifndef QAPC_H
#define QAPC_H

/* C interface to the assignment-to-lattice compiler.
 *
 * Every function returning int yields a status code; on failure the handle
 * and string outputs are left null and qapc_last_error() describes what went
 * wrong. Strings handed out through char** are heap copies owned by the
 * caller; release them with qapc_string_free. Handles have their own free
 * functions. All functions are safe to call from multiple threads as long as
 * no handle is shared between threads.
 */

#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

/* Status codes; the command-line tool maps them one-to-one to exit codes. */
#define QAPC_OK 0
#define QAPC_E_VERIFY 1   /* a checked result disagreed with its referee */
#define QAPC_E_PARSE 2    /* malformed input or unusable argument */
#define QAPC_E_TIMEOUT 3  /* solver budget exhausted */
#define QAPC_E_INTERNAL 4 /* broken invariant inside the library */

typedef struct qapc_instance qapc_instance;
typedef struct qapc_compiled qapc_compiled;

const char *qapc_version(void);

/* Message of the most recent failing call on the calling thread; empty
 * string when that call succeeded. The pointer stays valid until the next
 * library call on the same thread. */
const char *qapc_last_error(void);

void qapc_string_free(char *s);

/* -------- instances -------- */

/* Plain-text format: n, then the n*n flow matrix row-major, then the n*n
 * distance matrix, whitespace separated. swap_matrices reads the distance
 * matrix first. Entries are integers or rationals p/q; decimal literals are
 * rejected unless allow_float is set. */
int qapc_instance_parse(const char *text, int swap_matrices, int allow_float,
                        qapc_instance **out);
int qapc_instance_from_json(const char *json, qapc_instance **out);

/* Uniform entries in [lo, hi] from a deterministic seeded generator. */
int qapc_instance_random(int n, uint64_t seed, long long lo, long long hi,
                         qapc_instance **out);

int qapc_instance_to_json(const qapc_instance *inst, char **json_out);

/* Number of facilities, or -1 on a null handle. */
int qapc_instance_size(const qapc_instance *inst);

void qapc_instance_free(qapc_instance *inst);

/* -------- exact reference solver -------- */

/* Full enumeration of all placements. Result JSON carries the optimal cost,
 * every optimal placement and the number of placements examined. */
int qapc_oracle(const qapc_instance *inst, char **json_out);

/* -------- compilation --------
 *
 * formulation: "reduced" (eliminates one facility and one location, the
 * default pipeline) or "canonical" (one wire per assignment variable).
 * delta: "auto" or a positive rational. Auto picks a value strictly above
 * the decoding-soundness bound for the reduced pipeline, and strictly above
 * twice the certified slack for the canonical one. */
int qapc_compile(const qapc_instance *inst, const char *formulation,
                 const char *delta, qapc_compiled **out);

int qapc_compiled_graph_json(const qapc_compiled *cc, char **json_out);
int qapc_compiled_circuit_json(const qapc_compiled *cc, char **json_out);

/* Certified constants of the stitched circuit: k, the slack form, matched
 * connecting pairs, chosen delta, vertex and tile counts. */
int qapc_compiled_summary_json(const qapc_compiled *cc, char **json_out);

void qapc_compiled_free(qapc_compiled *cc);

/* -------- solvers --------
 *
 * solver: "brute" (exhaustive, small graphs) or "bnb" (branch and bound).
 * timeout_secs < 0 reads the QAPC_TIMEOUT_SECS environment variable and
 * falls back to 600. On QAPC_E_TIMEOUT the report is still written when the
 * solver produced one; its timed_out flag is set. */
int qapc_solve_graph_json(const char *graph_json, const char *solver,
                          double timeout_secs, int include_timing,
                          char **report_json_out);

/* Compile, solve, decode back to a placement. Result JSON: placement (one
 * location index per facility), cost, chosen delta, certified k, and the
 * solver report. */
int qapc_qap_solve(const qapc_instance *inst, const char *formulation,
                   const char *delta, const char *solver, double timeout_secs,
                   int include_timing, char **result_json_out);

/* qapc_qap_solve followed by the reference solver; QAPC_E_VERIFY when the
 * two disagree on the optimal cost. The result embeds both answers and is
 * byte-stable across runs (no timing fields). */
int qapc_check(const qapc_instance *inst, const char *formulation,
               const char *delta, const char *solver, double timeout_secs,
               char **result_json_out);

/* -------- tile library -------- */

/* Rebuilds the fragment library from scratch, re-running every certificate
 * proof, and reports each fragment's (k, slack form, vertex count). */
int qapc_verify_tiles(char **report_json_out);

/* The certified library with embedded certificates and integrity hash. */
int qapc_library_json(char **json_out);

/* -------- rendering --------
 *
 * Deterministic SVG output, integer coordinates only: identical input gives
 * identical bytes. cell is the pixel size of one grid cell (>= 8).
 * highlight_json, when non-null, is a solver report whose set is drawn
 * filled. */
int qapc_render_circuit(const char *circuit_json, int cell, int show_weights,
                        char **svg_out);
int qapc_render_graph(const char *graph_json, int cell, int show_weights,
                      const char *highlight_json, char **svg_out);

#ifdef __cplusplus
}
#endif

#endif /* QAPC_H */
