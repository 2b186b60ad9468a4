/*
 * listchroma: exact minimum-weight list coloring by branch-and-price.
 *
 * C interface. Objects are opaque handles released with the matching
 * *_free function. Functions return LC_OK or an error code; the message of
 * the most recent error on the calling thread is available from
 * lc_last_error(). Vertex and color ids are 1-based, as in instance files.
 */
#ifndef LISTCHROMA_H
#define LISTCHROMA_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  if defined(LISTCHROMA_BUILDING)
#    define LC_API __declspec(dllexport)
#  else
#    define LC_API __declspec(dllimport)
#  endif
#else
#  define LC_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum lc_error {
  LC_OK = 0,
  LC_ERR_INVALID_ARGUMENT = 1,
  LC_ERR_PARSE = 2,
  LC_ERR_IO = 3,
  LC_ERR_EMPTY_LIST = 4,
  LC_ERR_TOO_LARGE = 5,
  LC_ERR_INVALID_SOLUTION = 6,
  LC_ERR_INTERNAL = 7
} lc_error;

typedef enum lc_solve_status {
  LC_STATUS_OPTIMAL = 0,
  LC_STATUS_INFEASIBLE = 1,
  LC_STATUS_TIME_LIMIT = 2
} lc_solve_status;

typedef enum lc_weight_mode { LC_WEIGHTS_UNIT = 0, LC_WEIGHTS_UNIFORM = 1 } lc_weight_mode;

typedef struct lc_instance lc_instance;
typedef struct lc_result lc_result;

typedef struct lc_gen_config {
  int n;
  double p;
  double c;
  double q;
  lc_weight_mode weight_mode;
  int64_t weight_lo;
  int64_t weight_hi;
  uint64_t seed;
  int strict; /* nonzero: redraw instances with an empty list */
} lc_gen_config;

typedef struct lc_solve_options {
  double time_limit_seconds; /* negative: no limit */
  int same_first;            /* nonzero: SAME child before DIFFER */
  int use_assignment;        /* nonzero: bipartite matching on all-complete nodes */
} lc_solve_options;

LC_API const char* lc_version(void);
LC_API const char* lc_last_error(void);
LC_API const char* lc_generator_algorithm(void);

LC_API void lc_gen_config_default(lc_gen_config* cfg);
LC_API void lc_solve_options_default(lc_solve_options* opts);

/* Instances */
LC_API lc_error lc_instance_parse(const char* text, lc_instance** out);
LC_API lc_error lc_instance_load(const char* path, lc_instance** out);
LC_API lc_error lc_instance_generate(const lc_gen_config* cfg, lc_instance** out);
/* Writes `header` (may be NULL; one comment per '\n'-separated line) then the instance. */
LC_API lc_error lc_instance_save(const lc_instance* inst, const char* path, const char* header);
/* Size of the serialized text including the terminating NUL; copies it when buf is large enough. */
LC_API lc_error lc_instance_write(const lc_instance* inst, const char* header, char* buf,
                                  size_t buf_size, size_t* needed);
LC_API void lc_instance_free(lc_instance* inst);

LC_API int lc_instance_num_vertices(const lc_instance* inst);
LC_API int lc_instance_num_edges(const lc_instance* inst);
LC_API int lc_instance_num_colors(const lc_instance* inst);

/* Independent validity check of a full assignment colors[0..n-1] (1-based
 * colors). On success stores the weight of the active colors. Returns
 * LC_ERR_INVALID_SOLUTION with the violation in lc_last_error() otherwise. */
LC_API lc_error lc_check_coloring(const lc_instance* inst, const int* colors, size_t count,
                                  int64_t* weight);

/* Brute-force optimum for instances with at most `cap` vertices.
 * *feasible receives 0/1; *weight the optimum when feasible. */
LC_API lc_error lc_oracle_solve(const lc_instance* inst, int cap, int* feasible, int64_t* weight);

/* Solving. An instance whose file has an empty list solves as infeasible. */
LC_API lc_error lc_solve(const lc_instance* inst, const lc_solve_options* opts, lc_result** out);
LC_API void lc_result_free(lc_result* res);

LC_API lc_solve_status lc_result_status(const lc_result* res);
LC_API int lc_result_has_coloring(const lc_result* res);
LC_API int64_t lc_result_weight(const lc_result* res);
/* 1-based color of 1-based vertex v, or 0 when there is no coloring. */
LC_API int lc_result_color(const lc_result* res, int v);
LC_API uint64_t lc_result_nodes(const lc_result* res);
LC_API uint64_t lc_result_columns(const lc_result* res);
LC_API uint64_t lc_result_pricing_calls(const lc_result* res);
LC_API double lc_result_wall_seconds(const lc_result* res);

#ifdef __cplusplus
}
#endif

#endif /* LISTCHROMA_H */
