#include "c0ip.h"

#include <cmath>
#include <cstdio>
#include <cstring>
#include <exception>
#include <functional>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "c0ip/afem.hpp"
#include "c0ip/benchmarks.hpp"
#include "c0ip/estimator.hpp"
#include "c0ip/mesh.hpp"
#include "c0ip/penalty.hpp"

namespace {

thread_local std::string g_last_error;

c0ip_status fail(c0ip_status status, const std::string& message) {
  g_last_error = message;
  return status;
}

template <typename Fn>
c0ip_status guarded(Fn&& fn) {
  try {
    return fn();
  } catch (const std::invalid_argument& e) {
    return fail(C0IP_ERR_INVALID_ARGUMENT, e.what());
  } catch (const std::domain_error& e) {
    return fail(C0IP_ERR_INVALID_ARGUMENT, e.what());
  } catch (const std::exception& e) {
    return fail(C0IP_ERR_NUMERIC, e.what());
  }
}

double opt_or_nan(const std::optional<double>& value) {
  return value ? *value : std::numeric_limits<double>::quiet_NaN();
}

}  // namespace

struct c0ip_mesh {
  c0ip::Mesh mesh;
};

namespace {

c0ip_status sigma_rows(const c0ip_mesh* mesh, c0ip_sigma_row* rows,
                       const std::function<c0ip::PenaltyField(const c0ip::Geometry&,
                                                              const c0ip::EdgeTopology&)>& make) {
  const auto topo = c0ip::build_topology(mesh->mesh);
  const auto geom = c0ip::compute_geometry(mesh->mesh, topo);
  const auto field = make(geom, topo);
  for (int e = 0; e < topo.edge_count(); ++e) {
    rows[e].edge = static_cast<size_t>(e);
    rows[e].v0 = topo.edge_vertices[e][0];
    rows[e].v1 = topo.edge_vertices[e][1];
    rows[e].interior = topo.is_interior[e] ? 1 : 0;
    rows[e].sigma = field.sigma[e];
  }
  return C0IP_OK;
}

void copy_sweep_rows(const std::vector<c0ip::SweepRow>& result, c0ip_sweep_row* rows) {
  for (size_t i = 0; i < result.size(); ++i) {
    rows[i].a = result[i].a;
    rows[i].ndof = result[i].ndof;
    rows[i].lambda1 = result[i].lambda1;
    rows[i].cond1 = result[i].cond1;
  }
}

}  // namespace

struct c0ip_run {
  std::vector<c0ip::RunRecord> records;
};

extern "C" {

const char* c0ip_status_name(c0ip_status status) {
  switch (status) {
    case C0IP_OK: return "ok";
    case C0IP_ERR_INVALID_ARGUMENT: return "invalid argument";
    case C0IP_ERR_IO: return "io error";
    case C0IP_ERR_NUMERIC: return "numeric failure";
  }
  return "unknown";
}

const char* c0ip_last_error(void) { return g_last_error.c_str(); }

c0ip_status c0ip_mesh_create(const double* coords, size_t n_vertices, const int* triangles,
                             size_t n_triangles, c0ip_mesh** out) {
  if (!coords || !triangles || !out)
    return fail(C0IP_ERR_INVALID_ARGUMENT, "null pointer argument");
  return guarded([&] {
    c0ip::Mesh mesh;
    mesh.coords.reserve(n_vertices);
    for (size_t v = 0; v < n_vertices; ++v)
      mesh.coords.emplace_back(coords[2 * v], coords[2 * v + 1]);
    mesh.triangles.reserve(n_triangles);
    for (size_t t = 0; t < n_triangles; ++t)
      mesh.triangles.push_back({triangles[3 * t], triangles[3 * t + 1], triangles[3 * t + 2]});
    mesh = c0ip::fix_local_enumeration(std::move(mesh));
    c0ip::assign_refinement_edges(mesh);
    *out = new c0ip_mesh{std::move(mesh)};
    return C0IP_OK;
  });
}

c0ip_status c0ip_mesh_read(const char* path, c0ip_mesh** out) {
  if (!path || !out) return fail(C0IP_ERR_INVALID_ARGUMENT, "null pointer argument");
  return guarded([&]() -> c0ip_status {
    c0ip::Mesh mesh;
    try {
      mesh = c0ip::read_mesh_file(path);
    } catch (const std::runtime_error& e) {
      return fail(C0IP_ERR_IO, e.what());
    }
    mesh = c0ip::fix_local_enumeration(std::move(mesh));
    c0ip::assign_refinement_edges(mesh);
    *out = new c0ip_mesh{std::move(mesh)};
    return C0IP_OK;
  });
}

c0ip_status c0ip_mesh_write(const c0ip_mesh* mesh, const char* path) {
  if (!mesh || !path) return fail(C0IP_ERR_INVALID_ARGUMENT, "null pointer argument");
  return guarded([&]() -> c0ip_status {
    try {
      c0ip::write_mesh_file(mesh->mesh, path);
    } catch (const std::runtime_error& e) {
      return fail(C0IP_ERR_IO, e.what());
    }
    return C0IP_OK;
  });
}

c0ip_status c0ip_mesh_benchmark(const char* name, c0ip_mesh** out) {
  if (!name || !out) return fail(C0IP_ERR_INVALID_ARGUMENT, "null pointer argument");
  return guarded([&] {
    const auto id = c0ip::benchmark_from_name(name);
    *out = new c0ip_mesh{c0ip::make_benchmark(id).initial_mesh};
    return C0IP_OK;
  });
}

c0ip_status c0ip_mesh_lshape_grid(int cells_per_side, c0ip_mesh** out) {
  if (!out) return fail(C0IP_ERR_INVALID_ARGUMENT, "null pointer argument");
  return guarded([&] {
    *out = new c0ip_mesh{c0ip::lshape_uniform_grid(cells_per_side)};
    return C0IP_OK;
  });
}

c0ip_status c0ip_mesh_refine_uniform(const c0ip_mesh* mesh, int rounds, c0ip_mesh** out) {
  if (!mesh || !out) return fail(C0IP_ERR_INVALID_ARGUMENT, "null pointer argument");
  if (rounds < 0) return fail(C0IP_ERR_INVALID_ARGUMENT, "rounds must be non-negative");
  return guarded([&] {
    *out = new c0ip_mesh{c0ip::refine_uniform(mesh->mesh, rounds)};
    return C0IP_OK;
  });
}

void c0ip_mesh_destroy(c0ip_mesh* mesh) { delete mesh; }

c0ip_status c0ip_mesh_stats(const c0ip_mesh* mesh, c0ip_mesh_report* out) {
  if (!mesh || !out) return fail(C0IP_ERR_INVALID_ARGUMENT, "null pointer argument");
  return guarded([&] {
    const auto topo = c0ip::build_topology(mesh->mesh);
    const auto geom = c0ip::compute_geometry(mesh->mesh, topo);
    const auto dofs = c0ip::build_dofmap(mesh->mesh, topo);
    out->vertices = mesh->mesh.coords.size();
    out->triangles = mesh->mesh.triangles.size();
    out->edges = topo.edge_vertices.size();
    out->interior_edges = static_cast<size_t>(topo.interior_count);
    out->boundary_edges = out->edges - out->interior_edges;
    out->interior_dofs = dofs.interior_dofs.size();
    out->total_area = 0.0;
    for (double area : geom.area) out->total_area += area;
    out->min_angle = c0ip::min_angle(mesh->mesh);
    return C0IP_OK;
  });
}

c0ip_status c0ip_mesh_edge_count(const c0ip_mesh* mesh, size_t* out) {
  if (!mesh || !out) return fail(C0IP_ERR_INVALID_ARGUMENT, "null pointer argument");
  return guarded([&] {
    *out = c0ip::build_topology(mesh->mesh).edge_vertices.size();
    return C0IP_OK;
  });
}

c0ip_status c0ip_sigma_table(const c0ip_mesh* mesh, int degree, double a, c0ip_sigma_row* rows) {
  if (!mesh || !rows) return fail(C0IP_ERR_INVALID_ARGUMENT, "null pointer argument");
  return guarded([&] {
    return sigma_rows(mesh, rows, [&](const auto& geom, const auto& topo) {
      return c0ip::sigma_triangle({a, degree}, geom, topo);
    });
  });
}

c0ip_status c0ip_sigma_table_variable(const c0ip_mesh* mesh, const int* degrees, double a,
                                      c0ip_sigma_row* rows) {
  if (!mesh || !degrees || !rows)
    return fail(C0IP_ERR_INVALID_ARGUMENT, "null pointer argument");
  return guarded([&] {
    const std::vector<int> per_triangle(degrees, degrees + mesh->mesh.triangles.size());
    return sigma_rows(mesh, rows, [&](const auto& geom, const auto& topo) {
      return c0ip::sigma_variable_degree(a, per_triangle, geom, topo);
    });
  });
}

c0ip_status c0ip_sigma_rectangle(int degree, double a, const double* h,
                                 const double* area_plus, const double* area_minus,
                                 size_t n_edges, double* sigma_out) {
  if (!h || !area_plus || !sigma_out)
    return fail(C0IP_ERR_INVALID_ARGUMENT, "null pointer argument");
  return guarded([&] {
    std::vector<c0ip::RectangleEdge> edges(n_edges);
    for (size_t e = 0; e < n_edges; ++e)
      edges[e] = {h[e], area_plus[e], area_minus ? area_minus[e] : -1.0};
    const auto field = c0ip::sigma_rectangle(a, degree, edges);
    for (size_t e = 0; e < n_edges; ++e) sigma_out[e] = field.sigma[e];
    return C0IP_OK;
  });
}

void c0ip_run_options_init(c0ip_run_options* options) {
  if (!options) return;
  std::memset(options, 0, sizeof *options);
  options->benchmark = "lshape";
  options->mode = C0IP_REFINE_ADAPTIVE;
  options->theta = 0.5;
  options->a = 2.0;
  options->max_ndof = 10000;
  options->g_variant = C0IP_G_SYMMETRIC;
}

c0ip_status c0ip_run_execute(const c0ip_run_options* options, c0ip_run** out) {
  if (!options || !options->benchmark || !out)
    return fail(C0IP_ERR_INVALID_ARGUMENT, "null pointer argument");
  return guarded([&] {
    c0ip::RunConfig config;
    config.benchmark = c0ip::benchmark_from_name(options->benchmark);
    config.mode = options->mode == C0IP_REFINE_UNIFORM ? c0ip::RefineMode::uniform
                                                       : c0ip::RefineMode::adaptive;
    config.theta = options->theta;
    config.a = options->a;
    config.max_ndof = options->max_ndof;
    config.compute_lambda1 = options->compute_lambda1 != 0;
    config.compute_cond1 = options->compute_cond1 != 0;
    config.g_variant = options->g_variant == C0IP_G_PUBLISHED ? c0ip::GVariant::published
                                                              : c0ip::GVariant::symmetric;
    *out = new c0ip_run{c0ip::run(config)};
    return C0IP_OK;
  });
}

void c0ip_run_destroy(c0ip_run* run) { delete run; }

size_t c0ip_run_level_count(const c0ip_run* run) { return run ? run->records.size() : 0; }

c0ip_status c0ip_run_record_at(const c0ip_run* run, size_t level, c0ip_run_record* out) {
  if (!run || !out) return fail(C0IP_ERR_INVALID_ARGUMENT, "null pointer argument");
  if (level >= run->records.size())
    return fail(C0IP_ERR_INVALID_ARGUMENT, "record index out of range");
  const auto& rec = run->records[level];
  out->level = static_cast<size_t>(rec.level);
  out->ndof = rec.ndof;
  out->triangles = rec.triangles;
  out->eta = rec.eta;
  out->error = opt_or_nan(rec.energy_error);
  out->lambda1 = opt_or_nan(rec.lambda1);
  out->cond1 = opt_or_nan(rec.cond1);
  return C0IP_OK;
}

c0ip_status c0ip_sweep_a(const char* benchmark, int uniform_rounds, const double* a_values,
                         size_t n_values, c0ip_sweep_row* rows) {
  if (!benchmark || !a_values || !rows)
    return fail(C0IP_ERR_INVALID_ARGUMENT, "null pointer argument");
  if (uniform_rounds < 0) return fail(C0IP_ERR_INVALID_ARGUMENT, "rounds must be non-negative");
  return guarded([&] {
    const auto id = c0ip::benchmark_from_name(benchmark);
    const std::vector<double> values(a_values, a_values + n_values);
    copy_sweep_rows(c0ip::sweep_a(id, uniform_rounds, values), rows);
    return C0IP_OK;
  });
}

c0ip_status c0ip_sweep_a_grid(int cells_per_side, const double* a_values, size_t n_values,
                              c0ip_sweep_row* rows) {
  if (!a_values || !rows) return fail(C0IP_ERR_INVALID_ARGUMENT, "null pointer argument");
  return guarded([&] {
    const std::vector<double> values(a_values, a_values + n_values);
    copy_sweep_rows(
        c0ip::sweep_a_on_mesh(c0ip::lshape_uniform_grid(cells_per_side), values), rows);
    return C0IP_OK;
  });
}

c0ip_status c0ip_mesh_matrix_export(const c0ip_mesh* mesh, double a, const char* which,
                                    const char* path) {
  if (!mesh || !which || !path) return fail(C0IP_ERR_INVALID_ARGUMENT, "null pointer argument");
  return guarded([&]() -> c0ip_status {
    const auto topo = c0ip::build_topology(mesh->mesh);
    const auto geom = c0ip::compute_geometry(mesh->mesh, topo);
    const auto dofs = c0ip::build_dofmap(mesh->mesh, topo);
    const auto sigma = c0ip::sigma_triangle({a, 2}, geom, topo);
    const auto sys = c0ip::assemble(mesh->mesh, topo, geom, sigma, dofs,
                                    [](const c0ip::Vec2&) { return 0.0; });
    const std::string name(which);
    const c0ip::SparseMat* matrix = nullptr;
    if (name == "system") matrix = &sys.system;
    else if (name == "stiffness") matrix = &sys.stiffness;
    else if (name == "jump") matrix = &sys.jump;
    else if (name == "penalty") matrix = &sys.penalty;
    else if (name == "norm") matrix = &sys.norm_matrix;
    else
      return fail(C0IP_ERR_INVALID_ARGUMENT,
                  "unknown matrix (expected system|stiffness|jump|penalty|norm): " + name);
    std::FILE* out = std::fopen(path, "w");
    if (!out) return fail(C0IP_ERR_IO, std::string("cannot open for writing: ") + path);
    for (int col = 0; col < matrix->outerSize(); ++col)
      for (c0ip::SparseMat::InnerIterator it(*matrix, col); it; ++it)
        std::fprintf(out, "%ld %ld %.17g\n", static_cast<long>(it.row()),
                     static_cast<long>(col), it.value());
    std::fclose(out);
    return C0IP_OK;
  });
}

c0ip_status c0ip_benchmark_eta(const char* benchmark, int uniform_rounds, double a,
                               c0ip_g_variant g_variant, double* eta2, size_t capacity,
                               size_t* n_triangles, double* eta_total) {
  if (!benchmark || !n_triangles) return fail(C0IP_ERR_INVALID_ARGUMENT, "null pointer argument");
  if (uniform_rounds < 0) return fail(C0IP_ERR_INVALID_ARGUMENT, "rounds must be non-negative");
  return guarded([&]() -> c0ip_status {
    const auto id = c0ip::benchmark_from_name(benchmark);
    const auto variant = g_variant == C0IP_G_PUBLISHED ? c0ip::GVariant::published
                                                       : c0ip::GVariant::symmetric;
    const c0ip::Benchmark bench = c0ip::make_benchmark(id, variant);
    const c0ip::Mesh mesh = c0ip::refine_uniform(bench.initial_mesh, uniform_rounds);
    *n_triangles = mesh.triangles.size();
    if (!eta2) return C0IP_OK;  // count query
    if (capacity < mesh.triangles.size())
      return fail(C0IP_ERR_INVALID_ARGUMENT, "eta2 buffer too small");
    const auto topo = c0ip::build_topology(mesh);
    const auto geom = c0ip::compute_geometry(mesh, topo);
    const auto dofs = c0ip::build_dofmap(mesh, topo);
    const auto sigma = c0ip::sigma_triangle({a, 2}, geom, topo);
    const auto sys = c0ip::assemble(mesh, topo, geom, sigma, dofs, bench.rhs);
    const auto solution = c0ip::restrict_and_solve(sys, dofs);
    const auto field =
        c0ip::estimate(mesh, topo, geom, sigma, dofs, solution.coefficients, bench.rhs);
    for (std::size_t t = 0; t < field.eta2.size(); ++t) eta2[t] = field.eta2[t];
    if (eta_total) *eta_total = field.eta_total;
    return C0IP_OK;
  });
}

}  // extern "C"
