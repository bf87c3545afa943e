#ifndef RCT_H
#define RCT_H

/* C interface to the reload-cost spanning tree toolkit.
 *
 * Conventions:
 *  - Every fallible function returns a status code from the RCT_* list and
 *    stores its result through out-pointers, which are set to NULL/zero on
 *    failure.
 *  - When `errmsg` is non-NULL and the call fails, *errmsg receives a
 *    heap-allocated description; release it with rct_string_free. On
 *    success *errmsg is set to NULL.
 *  - Handles are opaque; each rct_X_free accepts NULL.
 */

#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

enum {
    RCT_OK = 0,
    RCT_ERR_PARSE = 1,            /* malformed input text or file */
    RCT_ERR_INVALID_ARGUMENT = 2, /* argument violates the documented contract */
    RCT_ERR_PRECONDITION = 3,     /* instance unusable, e.g. disconnected */
    RCT_ERR_NOT_CACTUS = 4,       /* cactus solver forced onto a non-cactus */
    RCT_ERR_RESOURCE = 5,         /* enumeration or table budget exhausted */
    RCT_ERR_OVERFLOW = 6,         /* cost arithmetic left the 64-bit range */
    RCT_ERR_INTERNAL = 7          /* violated internal invariant; a bug */
};

typedef struct rct_instance rct_instance;
typedef struct rct_decomposition rct_decomposition;
typedef struct rct_solve_options rct_solve_options;
typedef struct rct_solution rct_solution;

const char* rct_version(void);
const char* rct_status_name(int status);
void rct_string_free(char* s);

/* ---- Instances ------------------------------------------------------- */
/* Text format: "rct n m q" header, "e u v color" per edge, "c ..." cost
 * matrix rows, optional "k budget" line; '#' starts a comment. */

int rct_instance_parse(const char* text, rct_instance** out, char** errmsg);
int rct_instance_read_file(const char* path, rct_instance** out, char** errmsg);
int rct_instance_to_text(const rct_instance* inst, char** out, char** errmsg);
int rct_instance_write_file(const rct_instance* inst, const char* path, char** errmsg);
void rct_instance_free(rct_instance* inst);

int32_t rct_instance_num_vertices(const rct_instance* inst);
int32_t rct_instance_num_edges(const rct_instance* inst);
int32_t rct_instance_num_colors(const rct_instance* inst);
int32_t rct_instance_max_degree(const rct_instance* inst);
int rct_instance_is_connected(const rct_instance* inst);
int rct_instance_is_cactus(const rct_instance* inst);
/* Per-vertex variant: over ordered triples of distinct edges at a vertex. */
int rct_instance_satisfies_triangle_inequality(const rct_instance* inst);
/* "tree" | "cycle" | "cactus" | "general" | "disconnected" */
const char* rct_instance_class(const rct_instance* inst);
int rct_instance_has_budget(const rct_instance* inst);
uint64_t rct_instance_budget(const rct_instance* inst); /* 0 when unset */
uint64_t rct_instance_max_cost(const rct_instance* inst);

int rct_instance_edge(const rct_instance* inst, int32_t edge, int32_t* u,
                      int32_t* v, int32_t* color, char** errmsg);
int rct_instance_cost(const rct_instance* inst, int32_t color_a, int32_t color_b,
                      uint64_t* out, char** errmsg);

/* ---- Tree decompositions --------------------------------------------- */
/* Text format mirrors the PACE convention: "s td <bags> <max bag size>
 * <n>", "b <id> <vertices...>", one edge pair per remaining line. */

int rct_decomposition_parse(const char* text, rct_decomposition** out, char** errmsg);
int rct_decomposition_read_file(const char* path, rct_decomposition** out, char** errmsg);
int rct_decomposition_to_text(const rct_decomposition* td, char** out, char** errmsg);
/* Min-fill heuristic over the instance graph. */
int rct_decomposition_heuristic(const rct_instance* inst, rct_decomposition** out,
                                char** errmsg);
/* RCT_OK when td is a valid decomposition of the instance graph; otherwise
 * RCT_ERR_INVALID_ARGUMENT with the failed axiom in *errmsg. */
int rct_decomposition_validate(const rct_instance* inst, const rct_decomposition* td,
                               char** errmsg);
int32_t rct_decomposition_width(const rct_decomposition* td);
void rct_decomposition_free(rct_decomposition* td);

/* ---- Solving ---------------------------------------------------------- */

rct_solve_options* rct_solve_options_new(void);
void rct_solve_options_free(rct_solve_options* opts);
/* name: "auto" | "brute" | "cactus" | "twdp" */
int rct_solve_options_set_algo(rct_solve_options* opts, const char* name);
/* Decide "diameter <= k" instead of minimizing. */
void rct_solve_options_set_decision(rct_solve_options* opts, uint64_t k);
void rct_solve_options_clear_decision(rct_solve_options* opts);
/* Borrowed; must outlive every solve using these options. NULL reverts to
 * the heuristic decomposition. */
void rct_solve_options_set_decomposition(rct_solve_options* opts,
                                         const rct_decomposition* td);
void rct_solve_options_set_max_operations(rct_solve_options* opts, uint64_t n);
void rct_solve_options_set_max_trees(rct_solve_options* opts, uint64_t n);

/* opts may be NULL for the defaults (auto algorithm, minimize). */
int rct_solve(const rct_instance* inst, const rct_solve_options* opts,
              rct_solution** out, char** errmsg);
void rct_solution_free(rct_solution* sol);

int rct_solution_yes(const rct_solution* sol); /* 1 in minimize mode */
int rct_solution_has_opt(const rct_solution* sol);
uint64_t rct_solution_opt(const rct_solution* sol); /* 0 when absent */
const char* rct_solution_algorithm(const rct_solution* sol);
const char* rct_solution_detected_class(const rct_solution* sol);
int32_t rct_solution_tree_size(const rct_solution* sol);
int32_t rct_solution_tree_edge(const rct_solution* sol, int32_t i); /* -1 if out of range */
int32_t rct_solution_width(const rct_solution* sol); /* -1 unless the DP ran */
uint64_t rct_solution_trees_examined(const rct_solution* sol);
uint64_t rct_solution_sat_probes(const rct_solution* sol);
uint64_t rct_solution_max_table(const rct_solution* sol);

/* ---- Instance generators ---------------------------------------------- */
/* Each takes source text (not a path) and yields an instance whose budget
 * field carries the reduction's decision threshold. */

/* DIMACS CNF, every clause exactly three non-complementary literals. */
int rct_gen_outerplanar_from_3sat(const char* dimacs, rct_instance** out, char** errmsg);
/* DIMACS CNF, clauses of size two or three, at most three occurrences per
 * variable; normalized so every variable occurs exactly three times with
 * both polarities before the gadgets are built. */
int rct_gen_degree3_from_3sat(const char* dimacs, rct_instance** out, char** errmsg);
/* "p part <n>" header plus n positive integers. */
int rct_gen_planar_from_partition(const char* text, rct_instance** out, char** errmsg);
/* "p ubp <n> <capacity> <bins>" header plus n positive integers. */
int rct_gen_from_unary_binpacking(const char* text, rct_instance** out, char** errmsg);
/* Random cactus on n vertices with a uniform cost table: the graph is drawn
 * from `seed`, the costs from `seed + 1`. */
int rct_gen_random_cactus(int32_t n, double cycle_prob, int32_t num_colors,
                          uint64_t max_cost, uint64_t seed, rct_instance** out,
                          char** errmsg);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* RCT_H */
