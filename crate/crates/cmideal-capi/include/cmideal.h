/* C interface of the cmideal library.
 *
 * Kept in sync with crates/cmideal-capi/src/lib.rs by hand. Link against
 * libcmideal_capi (cdylib or staticlib).
 *
 * Conventions:
 *   - fallible calls return a cmideal_status; on failure a thread-local
 *     message is available via cmideal_last_error() until the next failing
 *     call on that thread;
 *   - graphs and weight functions are opaque handles released with their
 *     _free function;
 *   - characteristic 0 selects the rationals, a prime p (p <= 2^31) the
 *     prime field F_p.
 */

#ifndef CMIDEAL_H
#define CMIDEAL_H

#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum cmideal_status {
  CMIDEAL_OK = 0,
  CMIDEAL_ERR_NULL_ARGUMENT = 1,
  CMIDEAL_ERR_UTF8 = 2,
  CMIDEAL_ERR_PARSE = 3,
  CMIDEAL_ERR_INVALID = 4,
  CMIDEAL_ERR_PANIC = 5,
} cmideal_status;

typedef struct cmideal_graph cmideal_graph;
typedef struct cmideal_weights cmideal_weights;

typedef struct cmideal_report {
  bool is_cm;
  bool is_scm;
  bool unmixed;
  size_t dim;
  bool field_sensitive;
} cmideal_report;

const char *cmideal_last_error(void);
const char *cmideal_version(void);

/* Graphs. Text format: header "n <count>", one "u v" edge per line,
 * '#' starts a comment. */
int32_t cmideal_graph_parse(const char *text, cmideal_graph **out);
int32_t cmideal_graph_build(size_t n, const size_t *edges, size_t edge_count,
                            cmideal_graph **out);
void cmideal_graph_free(cmideal_graph *g);
size_t cmideal_graph_vertex_count(const cmideal_graph *g);
size_t cmideal_graph_edge_count(const cmideal_graph *g);
bool cmideal_graph_is_woodroofe(const cmideal_graph *g);
bool cmideal_graph_is_clique_union(const cmideal_graph *g);
bool cmideal_graph_is_very_well_covered(const cmideal_graph *g);

/* Weight functions. Text format: one "u v w" line per edge, every edge of
 * the companion graph exactly once. cmideal_weights_build takes one value
 * per edge in the graph's sorted edge order. */
int32_t cmideal_weights_parse(const cmideal_graph *g, const char *text,
                              cmideal_weights **out);
int32_t cmideal_weights_build(const cmideal_graph *g, const uint32_t *weights,
                              size_t len, cmideal_weights **out);
int32_t cmideal_weights_ones(const cmideal_graph *g, cmideal_weights **out);
void cmideal_weights_free(cmideal_weights *w);

/* Verdicts for the weighted edge ideal. */
int32_t cmideal_check(const cmideal_graph *g, const cmideal_weights *w,
                      uint32_t characteristic, bool cross_field,
                      cmideal_report *report);

/* Witness for a negative verdict (failing monomial, radical, reason) as a
 * caller-owned string; *out is set to NULL when the verdict is positive.
 * Release with cmideal_string_free. */
int32_t cmideal_witness(const cmideal_graph *g, const cmideal_weights *w,
                        uint32_t characteristic, bool sequential, char **out);

int32_t cmideal_unmixed_dim(const cmideal_graph *g, const cmideal_weights *w,
                            bool *unmixed, size_t *dim);

void cmideal_string_free(char *s);

#ifdef __cplusplus
}
#endif

#endif /* CMIDEAL_H */
