#include "c0ip/afem.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>

#include "c0ip/estimator.hpp"
#include "c0ip/solver_analysis.hpp"

namespace c0ip {

std::vector<RunRecord> run(const RunConfig& config) {
  if (!(config.theta > 0.0) || config.theta > 1.0)
    throw std::invalid_argument("bulk parameter theta must lie in (0, 1]");
  if (!(config.a > 0.0)) throw std::invalid_argument("penalty prefactor a must be positive");

  const Benchmark bench = make_benchmark(config.benchmark, config.g_variant);
  Mesh mesh = bench.initial_mesh;

  std::vector<RunRecord> records;
  for (int level = 0;; ++level) {
    const EdgeTopology topo = build_topology(mesh);
    const Geometry geom = compute_geometry(mesh, topo);
    const DofMap dofs = build_dofmap(mesh, topo);
    const PenaltyField sigma = sigma_triangle({config.a, 2}, geom, topo);
    const AssembledSystem sys = assemble(mesh, topo, geom, sigma, dofs, bench.rhs);
    const DiscreteSolution solution = restrict_and_solve(sys, dofs);
    const EstimatorField est =
        estimate(mesh, topo, geom, sigma, dofs, solution.coefficients, bench.rhs);

    RunRecord rec;
    rec.level = level;
    rec.ndof = dofs.interior_dofs.size();
    rec.triangles = mesh.triangles.size();
    rec.eta = est.eta_total;
    if (bench.has_exact)
      rec.energy_error = energy_error(mesh, geom, dofs, sys.penalty, solution.coefficients,
                                      *bench.exact);
    if (config.compute_lambda1)
      rec.lambda1 =
          principal_eigenvalue(sys.system, sys.norm_matrix, dofs.interior_dofs).lambda1;
    if (config.compute_cond1)
      rec.cond1 = condition_estimate_1norm(sys.system, dofs.interior_dofs);
    records.push_back(rec);

    if (rec.ndof > config.max_ndof) break;

    std::vector<int> marked;
    if (config.mode == RefineMode::uniform) {
      marked.resize(mesh.triangles.size());
      std::iota(marked.begin(), marked.end(), 0);
    } else {
      marked = dorfler_mark(est.eta2, config.theta);
      if (marked.empty()) break;  // estimator vanished; nothing to drive refinement
    }
    mesh = refine_nvb(mesh, marked);
  }
  return records;
}

double empirical_rate(const std::vector<double>& ndof, const std::vector<double>& field) {
  if (ndof.size() != field.size())
    throw std::invalid_argument("empirical_rate: size mismatch");
  std::vector<double> logx;
  std::vector<double> logy;
  for (std::size_t i = 0; i < ndof.size(); ++i) {
    if (ndof[i] > 0.0 && field[i] > 0.0) {
      logx.push_back(std::log(ndof[i]));
      logy.push_back(std::log(field[i]));
    }
  }
  const std::size_t n = logx.size();
  if (n < 3) throw std::invalid_argument("empirical_rate needs at least 3 positive records");
  const std::size_t m = std::max<std::size_t>(3, n / 2);
  const std::size_t begin = n - m;

  double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
  for (std::size_t i = begin; i < n; ++i) {
    sx += logx[i];
    sy += logy[i];
    sxx += logx[i] * logx[i];
    sxy += logx[i] * logy[i];
  }
  const double count = static_cast<double>(m);
  const double denom = count * sxx - sx * sx;
  if (denom == 0.0) throw std::invalid_argument("empirical_rate: degenerate abscissae");
  return (count * sxy - sx * sy) / denom;
}

std::vector<SweepRow> sweep_a_on_mesh(const Mesh& mesh, const std::vector<double>& a_values,
                                      const EigenOptions& eigen_opts) {
  const EdgeTopology topo = build_topology(mesh);
  const Geometry geom = compute_geometry(mesh, topo);
  const DofMap dofs = build_dofmap(mesh, topo);

  const PenaltyField sigma_unit = sigma_triangle({1.0, 2}, geom, topo);
  const AssembledSystem base =
      assemble(mesh, topo, geom, sigma_unit, dofs, [](const Vec2&) { return 0.0; });
  const SparseMat stiffness_minus_jumps =
      base.stiffness - base.jump - SparseMat(base.jump.transpose());

  std::vector<SweepRow> rows;
  rows.reserve(a_values.size());
  for (double a : a_values) {
    if (!(a > 0.0)) throw std::invalid_argument("sweep prefactor a must be positive");
    const SparseMat scaled_penalty = a * base.penalty;
    const SparseMat b = stiffness_minus_jumps + scaled_penalty;
    const SparseMat n = base.stiffness + scaled_penalty;
    SweepRow row;
    row.a = a;
    row.ndof = dofs.interior_dofs.size();
    row.lambda1 = principal_eigenvalue(b, n, dofs.interior_dofs, eigen_opts).lambda1;
    row.cond1 = condition_estimate_1norm(b, dofs.interior_dofs);
    rows.push_back(row);
  }
  return rows;
}

std::vector<SweepRow> sweep_a(BenchmarkId benchmark, int uniform_rounds,
                              const std::vector<double>& a_values) {
  const Benchmark bench = make_benchmark(benchmark);
  return sweep_a_on_mesh(refine_uniform(bench.initial_mesh, uniform_rounds), a_values);
}

}  // namespace c0ip
