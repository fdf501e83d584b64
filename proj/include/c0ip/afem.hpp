#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "c0ip/benchmarks.hpp"
#include "c0ip/solver_analysis.hpp"

namespace c0ip {

enum class RefineMode { adaptive, uniform };

struct RunConfig {
  BenchmarkId benchmark = BenchmarkId::lshape;
  RefineMode mode = RefineMode::adaptive;
  double theta = 0.5;
  double a = 2.0;
  std::size_t max_ndof = 10000;
  bool compute_lambda1 = false;
  bool compute_cond1 = false;
  GVariant g_variant = GVariant::symmetric;
};

struct RunRecord {
  int level = 0;
  std::size_t ndof = 0;  // interior degrees of freedom
  std::size_t triangles = 0;
  double eta = 0.0;
  std::optional<double> energy_error;
  std::optional<double> lambda1;
  std::optional<double> cond1;
};

/// Solve-estimate-mark-refine loop. A record is produced per level; the loop
/// stops once a level's ndof exceeds max_ndof, so a bound below the initial
/// ndof yields exactly one record.
std::vector<RunRecord> run(const RunConfig& config);

/// Least-squares slope of log(field) against log(ndof), fitted over the last
/// max(3, n/2) of the n records with positive values. Requires at least 3.
double empirical_rate(const std::vector<double>& ndof, const std::vector<double>& field);

struct SweepRow {
  double a = 0.0;
  std::size_t ndof = 0;
  double lambda1 = 0.0;
  double cond1 = 0.0;
};

/// Strongly penalized pencils cluster at 1, so sweeps give the inverse
/// iteration a much larger budget than the per-level defaults.
inline constexpr EigenOptions kSweepEigenOptions{1e-11, 6000};

/// Stability and conditioning of the system matrix on one fixed mesh across
/// a list of penalty prefactors. The stiffness and jump parts are assembled
/// once; the penalty part scales linearly in a.
std::vector<SweepRow> sweep_a_on_mesh(const Mesh& mesh, const std::vector<double>& a_values,
                                      const EigenOptions& eigen_opts = kSweepEigenOptions);

std::vector<SweepRow> sweep_a(BenchmarkId benchmark, int uniform_rounds,
                              const std::vector<double>& a_values);

}  // namespace c0ip
