/* Broadcast domination / multipacking toolkit: C API.
 *
 * Opaque handles plus error codes. Every function that can fail returns a
 * bmp_status; on failure, bmp_last_error() holds a thread-local message.
 * Strings returned through char** are heap-allocated and must be released
 * with bmp_string_free().
 */
#ifndef BMP_H
#define BMP_H

#ifdef __cplusplus
extern "C" {
#endif

typedef struct bmp_graph bmp_graph;

typedef enum bmp_status {
    BMP_OK = 0,
    BMP_ERR_PARSE = 1,        /* malformed input text */
    BMP_ERR_FORMAT = 2,       /* malformed graph6 bytes */
    BMP_ERR_INVALID = 3,      /* invariant violation (self-loop, bad power, ...) */
    BMP_ERR_INDEX = 4,        /* vertex index out of range */
    BMP_ERR_DISCONNECTED = 5, /* operation requires a connected graph */
    BMP_ERR_CAP = 6,          /* solver size cap exceeded */
    BMP_ERR_PRECONDITION = 7, /* construction precondition unmet */
    BMP_ERR_NULL = 8          /* null argument */
} bmp_status;

/* Message for the most recent failure on this thread. Never NULL. */
const char* bmp_last_error(void);

void bmp_string_free(char* s);

/* --- construction and I/O ---------------------------------------------- */

/* Line-oriented "u v" pairs, optional "n <count>" header, '#' comments. */
bmp_status bmp_graph_from_edgelist(const char* text, bmp_graph** out);

/* One graph6 line (optional >>graph6<< header tolerated). */
bmp_status bmp_graph_from_graph6(const char* line, bmp_graph** out);

/* "kind:params", e.g. "cycle:5", "grid:3,4", "spider:2,2",
 * "gnp:40,0.1,7", "fig3a", "fig3b", "fig3c". */
bmp_status bmp_graph_generate(const char* desc, bmp_graph** out);

/* n vertices and edge_count edges given as 2*edge_count endpoints. */
bmp_status bmp_graph_create(int n, const int* endpoints, int edge_count, bmp_graph** out);

void bmp_graph_free(bmp_graph* g);

int bmp_graph_order(const bmp_graph* g);
int bmp_graph_edge_count(const bmp_graph* g);
int bmp_graph_component_count(const bmp_graph* g);

bmp_status bmp_graph_to_graph6(const bmp_graph* g, char** out);
bmp_status bmp_graph_to_edgelist(const bmp_graph* g, char** out);

/* --- distances ---------------------------------------------------------- */

/* Fills row[0..n-1] with BFS distances from source; -1 marks unreachable. */
bmp_status bmp_graph_distances(const bmp_graph* g, int source, int* row);

/* Radius/diameter with deterministic witnesses (smallest indices first).
 * Any output pointer may be NULL. Fails on disconnected graphs. */
bmp_status bmp_graph_metrics(const bmp_graph* g, int* radius, int* diameter,
                             int* center, int* diam_u, int* diam_v);

/* --- solvers, constructions, verification -------------------------------
 *
 * Results are JSON strings:
 *   solve:  {"parameter":"mp"|"gb","value":k,"witness":...,"nodes":N,"millis":T}
 *   approx: {"multipacking":[...],"size":k,"verified":true,"trace":{...}}
 *   verify: {"ok":true} | {"ok":false,"violation":{...}}
 */

/* cap <= 0 selects the default desk-scale cap (24 vertices). */
bmp_status bmp_solve_mp(const bmp_graph* g, int cap, char** result_json);
bmp_status bmp_solve_gb(const bmp_graph* g, int cap, char** result_json);

bmp_status bmp_approx_multipacking(const bmp_graph* g, char** result_json);

/* certificate_json is {"multipacking":[...]} or {"broadcast":{"v":power}}. */
bmp_status bmp_verify(const bmp_graph* g, const char* certificate_json, char** verdict_json);

#ifdef __cplusplus
}
#endif

#endif /* BMP_H */
