#ifndef CAI_CAI_H
#define CAI_CAI_H

#ifdef __cplusplus
extern "C" {
#endif

#if defined(__GNUC__)
#define CAI_API __attribute__((visibility("default")))
#else
#define CAI_API
#endif

typedef enum cai_status {
    CAI_OK = 0,
    CAI_UNSAT = 1,
    CAI_BUDGET_EXCEEDED = 2,
    CAI_INVALID = 3, /* a checked object fails its predicate (verify) */

    CAI_E_ARGUMENT = 10,
    CAI_E_PARSE = 11,
    CAI_E_OUT_OF_RANGE = 12,
    CAI_E_INVALID_GRAPH = 13,
    CAI_E_ROTATION = 14,
    CAI_E_PLANARITY = 15,
    CAI_E_PARTITION = 16,
    CAI_E_NOT_IN_CLASS = 17,
    CAI_E_PRECONDITION = 18,
    CAI_E_PROPERTY = 19,
    CAI_E_CONTRADICTORY = 20,
    CAI_E_SIZE_GUARD = 21,
    CAI_E_IO = 22,
    CAI_E_INTERNAL = 30 /* solver assertion: class violation, no case applies, ... */
} cai_status;

typedef enum cai_method { CAI_METHOD_EXACT = 0, CAI_METHOD_REDUCE = 1, CAI_METHOD_EARS = 2 } cai_method;

typedef struct cai_graph cai_graph;
typedef struct cai_solution cai_solution;

typedef struct cai_solve_options {
    int method;             /* cai_method */
    const int* forced_a;    /* exact only */
    int forced_a_count;
    const int* forced_i;
    int forced_i_count;
    long long node_budget;  /* 0 = unlimited */
    int workers;            /* 0 = CAI_WORKERS or 1 */
    int trace;              /* reduce: keep the reduction log */
    int base_size;          /* reduce: 0 = default 12 */
} cai_solve_options;

CAI_API const char* cai_version(void);
CAI_API const char* cai_status_name(int status);
/* message of the last failing call on this thread */
CAI_API const char* cai_last_error(void);
CAI_API void cai_string_free(char* s);
CAI_API void cai_default_options(cai_solve_options* opts);

/* graphs: the text format of the README; the rotation is optional */
CAI_API int cai_graph_parse(const char* text, cai_graph** out);
CAI_API int cai_graph_read(const char* path, cai_graph** out);
CAI_API void cai_graph_free(cai_graph* g);
CAI_API int cai_graph_n(const cai_graph* g);
CAI_API int cai_graph_edge_count(const cai_graph* g);
CAI_API int cai_graph_is_directed(const cai_graph* g);
CAI_API int cai_graph_has_rotation(const cai_graph* g);
CAI_API int cai_graph_serialize(const cai_graph* g, char** text);

/* solving; CAI_OK means a partition was found */
CAI_API int cai_solve(const cai_graph* g, const cai_solve_options* opts, cai_solution** out);
CAI_API void cai_solution_free(cai_solution* s);
CAI_API int cai_solution_status(const cai_solution* s);
CAI_API int cai_solution_in_a(const cai_solution* s, int v); /* 1, 0, or -1 without a partition */
CAI_API const char* cai_solution_partition(const cai_solution* s); /* "A ...\nI ...\n" or "" */
CAI_API const char* cai_solution_stats(const cai_solution* s);     /* key=value lines */
CAI_API const char* cai_solution_trace(const cai_solution* s);

/* verification; kind is "cai" or "two-acyclic"; CAI_OK or CAI_INVALID with a report */
CAI_API int cai_verify(const cai_graph* g, const char* kind, const char* partition_text, char** report);

/* generators */
CAI_API int cai_generate_family(const char* name, const int* size, int size_count, unsigned long long seed,
                                int orient, cai_graph** out);
CAI_API int cai_generate_random_f(unsigned long long seed, int min_n, int max_n, cai_graph** out);
CAI_API int cai_generate_series_parallel(unsigned long long seed, int n, int bipartite, cai_graph** out);
CAI_API int cai_generate_triangulation(int size_hint, unsigned long long seed, cai_graph** out);

/* gadgets: which is g1, g2, thm12, chain (uses k), fig8a .. fig8e (uses orientation) */
CAI_API int cai_gadget(const char* which, int k, unsigned orientation, cai_graph** out);
CAI_API int cai_gadget_verify(char** report);
CAI_API int cai_certify_theorem10(long long node_budget, int workers, char** report);

/* duality: up triangulates an embedded bipartite graph, down deletes class cls of a triangulation */
CAI_API int cai_dualize(const cai_graph* g, int up, int cls, cai_graph** out);
CAI_API int cai_ears(const cai_graph* g, char** text);
CAI_API int cai_audit(const cai_graph* g, char** report);

#ifdef __cplusplus
}
#endif

#endif
