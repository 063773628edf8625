/*
 * C interface to the motif library: degree-window search for induced
 * subgraphs in power-law graphs, inhomogeneous random graph generation and
 * the replication harness. All objects are opaque handles; every fallible
 * call returns a motif_status and leaves a message in motif_last_error().
 */
#ifndef MOTIF_H
#define MOTIF_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  if defined(MOTIF_BUILDING_LIBRARY)
#    define MOTIF_API __declspec(dllexport)
#  else
#    define MOTIF_API __declspec(dllimport)
#  endif
#else
#  define MOTIF_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum motif_status {
    MOTIF_OK = 0,
    MOTIF_ERR_INPUT = 1,    /* bad ids, sizes, pattern literals */
    MOTIF_ERR_PARAM = 2,    /* model or window parameter out of range */
    MOTIF_ERR_PARSE = 3,    /* malformed edge list or config file */
    MOTIF_ERR_IO = 4,
    MOTIF_ERR_FIT = 5,      /* power-law tail too short or degenerate */
    MOTIF_ERR_REFUSED = 6,  /* instance too large for a quadratic routine */
    MOTIF_ERR_INTERNAL = 7
} motif_status;

typedef struct motif_graph motif_graph;
typedef struct motif_pattern motif_pattern;

MOTIF_API const char *motif_version(void);

/* Message of the last failed call on this thread; "" if none. */
MOTIF_API const char *motif_last_error(void);

MOTIF_API const char *motif_status_name(motif_status status);

/* ---- graphs ---------------------------------------------------------- */

/* pairs holds 2*count vertex ids (u0, v0, u1, v1, ...), each < n. */
MOTIF_API motif_status motif_graph_from_edges(uint64_t n, const uint64_t *pairs, size_t count, motif_graph **out);

/* SNAP-style edge list; labels are remapped to 0..n-1 in ascending order. */
MOTIF_API motif_status motif_graph_read_edgelist(const char *path, motif_graph **out);

typedef enum motif_generator { MOTIF_GEN_FAST = 0, MOTIF_GEN_NAIVE = 1 } motif_generator;

typedef struct motif_irg_params {
    uint64_t n;
    double tau;   /* in (2, 3) */
    double w_min; /* > 0; 1 gives the standard Pareto normalization */
    uint64_t seed;
    motif_generator generator;
} motif_irg_params;

/* Samples weights and a graph; the weights stay attached to the handle. */
MOTIF_API motif_status motif_graph_generate_irg(const motif_irg_params *params, motif_graph **out);

MOTIF_API void motif_graph_free(motif_graph *graph);

MOTIF_API uint64_t motif_graph_num_vertices(const motif_graph *graph);
MOTIF_API uint64_t motif_graph_num_edges(const motif_graph *graph);
MOTIF_API uint64_t motif_graph_degree(const motif_graph *graph, uint64_t v);
/* Original label of vertex v (v itself for generated graphs). */
MOTIF_API int64_t motif_graph_label(const motif_graph *graph, uint64_t v);
/* Model weight of vertex v, or 0 when the graph was not generated. */
MOTIF_API double motif_graph_weight(const motif_graph *graph, uint64_t v);

/* "u v" per edge with u < v, ascending, after a "# n=... m=..." header. */
MOTIF_API motif_status motif_graph_write_edgelist(const motif_graph *graph, const char *path);
/* "vertex weight" per line; MOTIF_ERR_INPUT when the graph carries no weights. */
MOTIF_API motif_status motif_graph_write_weights(const motif_graph *graph, const char *path);

/* ---- patterns -------------------------------------------------------- */

/* `k;u-v,...` or a name: house, cycleK, cliqueK, starK, pathK. */
MOTIF_API motif_status motif_pattern_parse(const char *spec, motif_pattern **out);
MOTIF_API void motif_pattern_free(motif_pattern *pattern);
MOTIF_API int motif_pattern_size(const motif_pattern *pattern);
MOTIF_API int motif_pattern_edge_count(const motif_pattern *pattern);
/* Writes the k-1 one-based anchors of the depth-first expansion order. */
MOTIF_API motif_status motif_pattern_tree_order(const motif_pattern *pattern, int *anchors, size_t capacity);

/* ---- search ---------------------------------------------------------- */

typedef enum motif_window_kind {
    MOTIF_WINDOW_SQRT = 0,  /* [sqrt(f1 mu n), sqrt(f2 mu n)] */
    MOTIF_WINDOW_GAMMA = 1, /* [(mu n)^gamma / ln n, (mu n)^gamma] */
    MOTIF_WINDOW_ALL = 2
} motif_window_kind;

typedef struct motif_search_options {
    int algorithm; /* 1: random partition, 2: neighborhood growth */
    motif_window_kind window;
    double f1;
    int f1_inverse_log; /* nonzero: f1 = 1 / ln n, f1 ignored */
    double f2;          /* may be INFINITY */
    double gamma;
    double mu;          /* <= 0: mean degree 2m/n of the graph */
    uint64_t n;         /* 0: vertex count of the graph */
    uint64_t budget;    /* attempts for algorithm 2 */
    uint64_t seed;
} motif_search_options;

MOTIF_API void motif_search_options_init(motif_search_options *options);

typedef struct motif_search_result {
    int found;
    int k;
    uint64_t checks;
    uint64_t attempts;
    uint64_t selected;
    double window_lo;
    double window_hi;
    uint64_t embedding[16]; /* embedding[a] = graph vertex of pattern vertex a, a < k */
} motif_search_result;

MOTIF_API motif_status motif_find(const motif_graph *graph, const motif_pattern *pattern,
                                  const motif_search_options *options, motif_search_result *result);

/* ---- data statistics ------------------------------------------------- */

typedef struct motif_dataset_stats {
    uint64_t n;
    uint64_t m;
    double mean_degree;
    double tau;
    uint64_t d_min;
    uint64_t tail_size;
} motif_dataset_stats;

/* d_min == 0 scans for the KS-optimal lower cutoff. */
MOTIF_API motif_status motif_dataset_stats_compute(const motif_graph *graph, uint64_t d_min, motif_dataset_stats *out);

/* ---- experiments ----------------------------------------------------- */

/* Runs a key=value config file. Non-null csv_path / log_path / threads > 0
 * override the file's settings. */
MOTIF_API motif_status motif_experiment_run(const char *config_path, const char *csv_path, const char *log_path,
                                            unsigned threads);

#ifdef __cplusplus
}
#endif

#endif /* MOTIF_H */
