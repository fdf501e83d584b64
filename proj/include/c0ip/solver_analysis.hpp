#pragma once

#include <vector>

#include "c0ip/assembly.hpp"

namespace c0ip {

struct EigenOptions {
  double tolerance = 1e-8;  // relative stagnation of the Rayleigh quotient
  int max_iterations = 500;
};

struct EigenResult {
  double lambda1 = 0.0;
  int iterations = 0;
  double residual = 0.0;  // ||B x - lambda N x|| / ||N x||
  bool converged = false;
  bool shifted = false;   // diagonal shift applied to factor a singular matrix
};

/// Smallest eigenvalue of the pencil (B, N) restricted to the given dofs,
/// by inverse iteration with a deterministic all-ones start vector. The
/// returned value is the Rayleigh quotient of the final iterate, hence always
/// an upper bound of the exact smallest eigenvalue.
EigenResult principal_eigenvalue(const SparseMat& b, const SparseMat& n,
                                 const std::vector<int>& dofs, const EigenOptions& opts = {});

EigenResult principal_eigenvalue_restricted(const SparseMat& b, const SparseMat& n,
                                            const EigenOptions& opts = {});

/// Lower bound of the 1-norm condition number: the exact matrix 1-norm times
/// a Hager-style estimate of the inverse norm driven by repeated solves.
double condition_estimate_1norm(const SparseMat& b, const std::vector<int>& dofs);

double condition_estimate_1norm_restricted(const SparseMat& b);

}  // namespace c0ip
