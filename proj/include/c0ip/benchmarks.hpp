#pragma once

#include <functional>
#include <optional>
#include <string>

#include "c0ip/assembly.hpp"
#include "c0ip/jet.hpp"
#include "c0ip/mesh.hpp"

namespace c0ip {

enum class BenchmarkId { lshape, cusp, dumbbell, fourslit, square_smooth };

/// Angular factor of the corner singular solutions. The published formula
/// repeats the (alpha - 1) denominator inside its second bracket; the
/// symmetric variant uses (alpha + 1) there, which is the form that actually
/// satisfies the clamped conditions along both corner edges.
enum class GVariant { published, symmetric };

BenchmarkId benchmark_from_name(const std::string& name);
std::string benchmark_name(BenchmarkId id);

double g_angular(double phi, double alpha, double omega, GVariant variant);
Jet4 g_angular(const Jet4& phi, double alpha, double omega, GVariant variant);

/// Residual of sin^2(alpha omega) = alpha^2 sin^2(omega).
double noncharacteristic_residual(double alpha, double omega);

struct ExactSolution {
  std::function<double(const Vec2&)> value;
  std::function<Vec2(const Vec2&)> gradient;
  std::function<Eigen::Matrix2d(const Vec2&)> hessian;
  std::function<double(const Vec2&)> bilaplacian;  // source term
};

/// Corner singular solution r^(1+alpha) g(phi - offset) under the quartic
/// cutoff (1 - x^2)^2 (1 - y^2)^2; all derivatives through one order-4
/// expansion. Rejects evaluation at the corner r = 0.
ExactSolution corner_singular_solution(double alpha, double omega, double angle_offset,
                                       GVariant variant);

/// Polynomial verification problem on the unit square:
/// u = (x(1-x) y(1-y))^2 with hand-expanded derivatives.
ExactSolution smooth_manufactured();

struct Benchmark {
  BenchmarkId id;
  std::string name;
  Mesh initial_mesh;
  double alpha = 0.0;  // singularity exponent, 0 when not applicable
  double omega = 0.0;  // interior angle at the reentrant corner
  bool has_exact = false;
  std::optional<ExactSolution> exact;
  std::function<double(const Vec2&)> rhs;
};

Benchmark make_benchmark(BenchmarkId id, GVariant variant = GVariant::symmetric);

/// Uniform structured triangulation of the L, n cells per unit side, every
/// square split along the (1,1) diagonal; 6 n^2 triangles. This is the mesh
/// family of the stability parameter study: at n = 32 the computed 1-norm
/// condition numbers reproduce the tabulated reference values to all
/// published digits.
Mesh lshape_uniform_grid(int cells_per_side);

constexpr double kLshapeAlpha = 0.5444837;
constexpr double kCuspAlpha = 0.50500969;

/// Mesh-dependent error norm against a known solution: piecewise Hessian
/// misfit by the degree-5 triangle rule plus the penalty form of the
/// discrete solution (the exact solution has no gradient jumps).
double energy_error(const Mesh& mesh, const Geometry& geom, const DofMap& dofs,
                    const SparseMat& penalty_matrix, const Eigen::VectorXd& coefficients,
                    const ExactSolution& exact);

}  // namespace c0ip
