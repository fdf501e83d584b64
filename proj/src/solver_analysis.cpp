#include "c0ip/solver_analysis.hpp"

#include <cmath>
#include <random>
#include <stdexcept>

#include <Eigen/SparseCholesky>

namespace c0ip {

namespace {

double diagonal_trace(const SparseMat& m) {
  double trace = 0.0;
  for (int col = 0; col < m.outerSize(); ++col)
    for (SparseMat::InnerIterator it(m, col); it; ++it)
      if (it.row() == col) trace += it.value();
  return trace;
}

SparseMat shifted_by(const SparseMat& m, double shift) {
  SparseMat id(m.rows(), m.cols());
  id.setIdentity();
  return m + shift * id;
}

/// Factorization that falls back to a tiny diagonal shift when the plain
/// decomposition breaks down (a at or below the guaranteed range).
class Factorization {
 public:
  explicit Factorization(const SparseMat& m) {
    ldlt_.compute(m);
    if (ldlt_.info() != Eigen::Success || !solve_is_finite(m)) {
      const double shift = 1e-12 * std::abs(diagonal_trace(m));
      ldlt_.compute(shifted_by(m, shift));
      shifted_ = true;
      if (ldlt_.info() != Eigen::Success)
        throw std::runtime_error("matrix factorization failed even with diagonal shift");
    }
  }

  Eigen::VectorXd solve(const Eigen::VectorXd& rhs) const { return ldlt_.solve(rhs); }
  bool shifted() const { return shifted_; }

 private:
  bool solve_is_finite(const SparseMat& m) {
    const Eigen::VectorXd probe = Eigen::VectorXd::Ones(m.rows());
    return ldlt_.solve(probe).allFinite();
  }

  Eigen::SimplicialLDLT<SparseMat> ldlt_;
  bool shifted_ = false;
};

}  // namespace

EigenResult principal_eigenvalue_restricted(const SparseMat& b, const SparseMat& n,
                                            const EigenOptions& opts) {
  if (b.rows() != n.rows() || b.rows() == 0)
    throw std::invalid_argument("pencil matrices must agree in size and be non-empty");

  EigenResult result;
  Factorization factor(b);
  result.shifted = factor.shifted();

  // Deterministic seeded start. A plain all-ones vector is orthogonal to
  // every antisymmetric eigenvector on meshes with a reflection symmetry and
  // then locks onto the wrong symmetry class.
  Eigen::VectorXd x(b.rows());
  std::mt19937 rng(20240809);
  std::normal_distribution<double> gauss;
  for (int i = 0; i < x.size(); ++i) x(i) = gauss(rng);
  x.normalize();
  double rho_prev = std::numeric_limits<double>::infinity();
  for (int iter = 1; iter <= opts.max_iterations; ++iter) {
    result.iterations = iter;
    const Eigen::VectorXd nx = n * x;
    const double rho = x.dot(b * x) / x.dot(nx);
    if (std::abs(rho - rho_prev) <= opts.tolerance * std::abs(rho)) {
      result.lambda1 = rho;
      result.converged = true;
      break;
    }
    rho_prev = rho;
    x = factor.solve(nx);
    const double norm = x.norm();
    if (!(norm > 0.0) || !x.allFinite())
      throw std::runtime_error("inverse iteration broke down");
    x /= norm;
    result.lambda1 = rho;
  }
  if (!result.converged) result.lambda1 = x.dot(b * x) / x.dot(n * x);
  const Eigen::VectorXd nx = n * x;
  result.residual = (b * x - result.lambda1 * nx).norm() / nx.norm();
  return result;
}

EigenResult principal_eigenvalue(const SparseMat& b, const SparseMat& n,
                                 const std::vector<int>& dofs, const EigenOptions& opts) {
  return principal_eigenvalue_restricted(restrict_matrix(b, dofs), restrict_matrix(n, dofs),
                                         opts);
}

double condition_estimate_1norm_restricted(const SparseMat& b) {
  const int n = static_cast<int>(b.rows());
  if (n == 0) throw std::invalid_argument("empty matrix in condition estimate");

  double norm_b = 0.0;
  for (int col = 0; col < b.outerSize(); ++col) {
    double sum = 0.0;
    for (SparseMat::InnerIterator it(b, col); it; ++it) sum += std::abs(it.value());
    norm_b = std::max(norm_b, sum);
  }

  Factorization factor(b);

  // Hager's 1-norm power method on the inverse; b is symmetric, so the
  // transpose solve is the same solve.
  Eigen::VectorXd x = Eigen::VectorXd::Constant(n, 1.0 / n);
  double est = 0.0;
  for (int iter = 0; iter < 5; ++iter) {
    const Eigen::VectorXd y = factor.solve(x);
    est = std::max(est, y.lpNorm<1>());
    Eigen::VectorXd xi(n);
    for (int i = 0; i < n; ++i) xi(i) = y(i) < 0.0 ? -1.0 : 1.0;
    const Eigen::VectorXd z = factor.solve(xi);
    int j = 0;
    z.cwiseAbs().maxCoeff(&j);
    if (std::abs(z(j)) <= z.dot(x)) break;
    x.setZero();
    x(j) = 1.0;
  }

  // Alternating-sign probe guards against adversarial cancellation.
  Eigen::VectorXd alt(n);
  for (int i = 0; i < n; ++i) {
    const double mag = n > 1 ? 1.0 + static_cast<double>(i) / (n - 1) : 1.0;
    alt(i) = (i % 2 == 0) ? mag : -mag;
  }
  const double alt_est = factor.solve(alt).lpNorm<1>() / alt.lpNorm<1>();
  est = std::max(est, alt_est);

  return norm_b * est;
}

double condition_estimate_1norm(const SparseMat& b, const std::vector<int>& dofs) {
  return condition_estimate_1norm_restricted(restrict_matrix(b, dofs));
}

}  // namespace c0ip
