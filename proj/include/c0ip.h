/* Public C interface of the biharmonic C0 interior penalty solver.
 *
 * All entry points return a c0ip_status; C0IP_OK means success. On failure
 * c0ip_last_error() carries a human-readable message for the current thread.
 * Objects handed out through double pointers are owned by the caller and
 * released with the matching _destroy function.
 */

#ifndef C0IP_H
#define C0IP_H

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum c0ip_status {
  C0IP_OK = 0,
  C0IP_ERR_INVALID_ARGUMENT = 1,
  C0IP_ERR_IO = 2,
  C0IP_ERR_NUMERIC = 3
} c0ip_status;

const char* c0ip_status_name(c0ip_status status);
const char* c0ip_last_error(void);

/* ---- meshes ---- */

typedef struct c0ip_mesh c0ip_mesh;

/* coords: 2*n_vertices doubles (x0 y0 x1 y1 ...); triangles: 3*n_triangles
 * 0-based vertex indices, counter-clockwise. */
c0ip_status c0ip_mesh_create(const double* coords, size_t n_vertices, const int* triangles,
                             size_t n_triangles, c0ip_mesh** out);
c0ip_status c0ip_mesh_read(const char* path, c0ip_mesh** out);
c0ip_status c0ip_mesh_write(const c0ip_mesh* mesh, const char* path);
/* name: lshape | cusp | dumbbell | fourslit | square_smooth */
c0ip_status c0ip_mesh_benchmark(const char* name, c0ip_mesh** out);
/* Uniform structured L-shape grid, cells_per_side cells per unit side; the
 * mesh family of the stability parameter study. */
c0ip_status c0ip_mesh_lshape_grid(int cells_per_side, c0ip_mesh** out);
c0ip_status c0ip_mesh_refine_uniform(const c0ip_mesh* mesh, int rounds, c0ip_mesh** out);
void c0ip_mesh_destroy(c0ip_mesh* mesh);

typedef struct c0ip_mesh_report {
  size_t vertices;
  size_t triangles;
  size_t edges;
  size_t interior_edges;
  size_t boundary_edges;
  size_t interior_dofs; /* quadratic discretization */
  double total_area;
  double min_angle; /* radians */
} c0ip_mesh_report;

c0ip_status c0ip_mesh_stats(const c0ip_mesh* mesh, c0ip_mesh_report* out);

/* ---- penalty export ---- */

typedef struct c0ip_sigma_row {
  size_t edge;
  long long v0;
  long long v1;
  int interior;
  double sigma;
} c0ip_sigma_row;

c0ip_status c0ip_mesh_edge_count(const c0ip_mesh* mesh, size_t* out);

/* rows must hold c0ip_mesh_edge_count entries. */
c0ip_status c0ip_sigma_table(const c0ip_mesh* mesh, int degree, double a, c0ip_sigma_row* rows);

/* degrees: one polynomial degree per triangle. */
c0ip_status c0ip_sigma_table_variable(const c0ip_mesh* mesh, const int* degrees, double a,
                                      c0ip_sigma_row* rows);

/* Edge weight formula for rectangle meshes, one row per supplied edge;
 * area_minus <= 0 marks a boundary edge. */
c0ip_status c0ip_sigma_rectangle(int degree, double a, const double* h,
                                 const double* area_plus, const double* area_minus,
                                 size_t n_edges, double* sigma_out);

/* ---- solver runs ---- */

typedef enum c0ip_refine_mode { C0IP_REFINE_ADAPTIVE = 0, C0IP_REFINE_UNIFORM = 1 } c0ip_refine_mode;

/* Angular factor of the singular benchmark solutions: the corrected
 * symmetric form (default) or the published one. */
typedef enum c0ip_g_variant { C0IP_G_SYMMETRIC = 0, C0IP_G_PUBLISHED = 1 } c0ip_g_variant;

typedef struct c0ip_run_options {
  const char* benchmark;
  c0ip_refine_mode mode;
  double theta;
  double a;
  size_t max_ndof;
  int compute_lambda1;
  int compute_cond1;
  c0ip_g_variant g_variant;
} c0ip_run_options;

void c0ip_run_options_init(c0ip_run_options* options);

typedef struct c0ip_run_record {
  size_t level;
  size_t ndof;
  size_t triangles;
  double eta;
  double error;   /* NaN when no exact solution is available */
  double lambda1; /* NaN unless requested */
  double cond1;   /* NaN unless requested */
} c0ip_run_record;

typedef struct c0ip_run c0ip_run;

c0ip_status c0ip_run_execute(const c0ip_run_options* options, c0ip_run** out);
void c0ip_run_destroy(c0ip_run* run);
size_t c0ip_run_level_count(const c0ip_run* run);
c0ip_status c0ip_run_record_at(const c0ip_run* run, size_t level, c0ip_run_record* out);

/* ---- stability sweep over the penalty prefactor ---- */

typedef struct c0ip_sweep_row {
  double a;
  size_t ndof;
  double lambda1;
  double cond1;
} c0ip_sweep_row;

/* One row per prefactor on the benchmark mesh after the given number of
 * uniform refinement rounds. */
c0ip_status c0ip_sweep_a(const char* benchmark, int uniform_rounds, const double* a_values,
                         size_t n_values, c0ip_sweep_row* rows);

/* Same sweep on the structured L-shape grid family. */
c0ip_status c0ip_sweep_a_grid(int cells_per_side, const double* a_values, size_t n_values,
                              c0ip_sweep_row* rows);

/* ---- exports ---- */

/* Writes one assembled operator in 0-based coordinate text ("row col value"
 * per line). which: system | stiffness | jump | penalty | norm. */
c0ip_status c0ip_mesh_matrix_export(const c0ip_mesh* mesh, double a, const char* which,
                                    const char* path);

/* Per-triangle squared error indicators of one benchmark solve. Pass
 * eta2 = NULL to query the triangle count. */
c0ip_status c0ip_benchmark_eta(const char* benchmark, int uniform_rounds, double a,
                               c0ip_g_variant g_variant, double* eta2, size_t capacity,
                               size_t* n_triangles, double* eta_total);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* C0IP_H */
