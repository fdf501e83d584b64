#pragma once

#include <array>
#include <functional>
#include <vector>

#include <Eigen/Dense>
#include <Eigen/Sparse>

#include "c0ip/basis.hpp"
#include "c0ip/mesh.hpp"
#include "c0ip/penalty.hpp"

namespace c0ip {

using SparseMat = Eigen::SparseMatrix<double>;

/// Global degree-of-freedom numbering: vertex values first, then one value
/// per edge midpoint. Interior dofs exclude boundary vertices and the
/// midpoints of boundary edges.
struct DofMap {
  int n_vertices = 0;
  int n_edges = 0;
  std::vector<std::array<int, 6>> global4e;  // per triangle: P0..P2, M0..M2
  std::vector<std::array<int, 9>> global4s;  // per edge patch: Q0..Q8
  std::vector<int> interior_dofs;            // ascending
  std::vector<char> is_interior_dof;

  int total() const { return n_vertices + n_edges; }
};

DofMap build_dofmap(const Mesh& mesh, const EdgeTopology& topo);

/// Per-edge evaluations feeding the jump and penalty matrices: the normal
/// jumps of the nine patch shape-function gradients at the three edge nodes
/// (endpoints and midpoint), and the averaged binormal component of their
/// piecewise Hessians.
struct EdgePatchData {
  Eigen::Matrix<double, 9, 3> jump_normal;
  Eigen::Matrix<double, 9, 1> mean_hess_binormal;
};

EdgePatchData edge_patch_data(const EdgeTopology& topo, const Geometry& geom, int edge,
                              const std::vector<P2ElementData>& elements);

Eigen::Matrix<double, 6, 6> local_stiffness(const P2ElementData& element, double area);

/// Edge-midpoint quadrature: vertex shape functions vanish at all midpoints,
/// so only the midpoint entries carry load.
Eigen::Matrix<double, 6, 1> local_rhs(const std::array<double, 3>& f_at_midpoints, double area);

/// Rank-one: the binormal Hessian average is constant along the edge and the
/// gradient jump is linear, so the midpoint value integrates it exactly.
Eigen::Matrix<double, 9, 9> local_jump_matrix(const EdgePatchData& patch, double edge_length);

/// Simpson weights 1/6, 2/3, 1/6 at the edge endpoints and midpoint; exact
/// for the quadratic product of two gradient jumps.
Eigen::Matrix<double, 9, 9> local_penalty_matrix(const EdgePatchData& patch, double sigma);

struct AssembledSystem {
  SparseMat stiffness;    // piecewise Hessian energy
  SparseMat jump;         // Hessian-average against gradient-jump coupling
  SparseMat penalty;      // jump penalization, scales linearly in sigma
  SparseMat system;       // stiffness - jump - jump^T + penalty
  SparseMat norm_matrix;  // stiffness + penalty (discrete norm)
  Eigen::VectorXd rhs;
};

AssembledSystem assemble(const Mesh& mesh, const EdgeTopology& topo, const Geometry& geom,
                         const PenaltyField& sigma, const DofMap& dofs,
                         const std::function<double(const Vec2&)>& f);

std::vector<P2ElementData> element_data(const Mesh& mesh);

/// Restriction of a symmetric matrix to a dof subset, renumbered compactly.
SparseMat restrict_matrix(const SparseMat& m, const std::vector<int>& dofs);

struct SolveOptions {
  double cg_tolerance = 1e-10;
  int direct_max_dofs = 2'000'000;  // conjugate gradients beyond this size
};

struct DiscreteSolution {
  Eigen::VectorXd coefficients;  // full length, zero at boundary dofs
  double relative_residual = 0.0;
};

/// Solves the system restricted to the interior dofs; boundary coefficients
/// stay zero. Requires the restricted matrix to be positive definite, which
/// the penalty prefactor a > 1 guarantees.
DiscreteSolution restrict_and_solve(const AssembledSystem& system, const DofMap& dofs,
                                    const SolveOptions& opts = {});

}  // namespace c0ip
