#ifndef CIRCUM_H
#define CIRCUM_H

/* C interface to the circumference toolkit. All functions returning
 * cx_status yield CX_OK on success; on failure cx_last_error() describes
 * the problem (thread-local storage). */

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum cx_status {
    CX_OK = 0,
    CX_EINVAL = 1,   /* bad argument / violated precondition */
    CX_EPARSE = 2,   /* graph6 or spec parse failure */
    CX_ERANGE = 3,   /* buffer too small or value out of range */
    CX_EINTERNAL = 4
} cx_status;

typedef struct cx_graph cx_graph;
typedef struct cx_sweep cx_sweep;

const char* cx_last_error(void);

/* --- graphs ----------------------------------------------------------- */

cx_status cx_graph_from_graph6(const char* line, cx_graph** out);
cx_status cx_graph_to_graph6(const cx_graph* g, char* buf, size_t buflen);
void cx_graph_free(cx_graph* g);

/* "W:n=12,k=2,c=10" family grammar */
cx_status cx_family_build(const char* spec, cx_graph** out);

typedef struct cx_stats {
    int n;
    int edges;
    int min_degree;
    int circumference; /* 2 for acyclic graphs */
    int clique_number;
    int two_connected;
    int bondy_inside;   /* edges inside the canonical longest cycle; -1 if acyclic */
    int bondy_crossing; /* remaining edges; -1 if acyclic */
} cx_stats;

cx_status cx_graph_stats(const cx_graph* g, cx_stats* out);

/* --- closures --------------------------------------------------------- */

cx_status cx_k_closure(const cx_graph* g, int threshold, cx_graph** out);
/* edges added by the closure, as vertex pairs: pairs[2i], pairs[2i+1] */
cx_status cx_k_closure_trace(const cx_graph* g, int threshold, cx_graph** out,
                             int* pairs, size_t pairs_cap, size_t* pair_count);
/* C-closure with respect to the canonical longest cycle; fails on acyclic
 * input */
cx_status cx_c_closure(const cx_graph* g, cx_graph** out);

/* --- verification sweeps ---------------------------------------------- */

typedef struct cx_enum_spec {
    int n;                 /* exact order; generation supports 1..10 */
    int min_degree;
    int require_2connected;
    int min_circumference; /* 0 = none */
    int max_circumference; /* -1 = none */
    int min_edges;
} cx_enum_spec;

cx_status cx_sweep_create(const char* theorems_csv, const int* k_values,
                          size_t k_count, int all_longest_cycles, uint64_t seed,
                          cx_sweep** out);
cx_status cx_sweep_add_graph6(cx_sweep* s, const char* line);
/* run the built-in generator and feed every emitted graph to the sweep */
cx_status cx_sweep_add_generated(cx_sweep* s, const cx_enum_spec* spec);
long long cx_sweep_instances(const cx_sweep* s);
long long cx_sweep_counterexamples(const cx_sweep* s);
/* malloc'd report text; release with cx_string_free */
cx_status cx_sweep_report_text(const cx_sweep* s, char** out);
/* malloc'd newline-separated graph6 list of stored counterexamples */
cx_status cx_sweep_counterexample_list(const cx_sweep* s, char** out);
void cx_sweep_free(cx_sweep* s);

void cx_string_free(char* s);

#ifdef __cplusplus
}
#endif

#endif
