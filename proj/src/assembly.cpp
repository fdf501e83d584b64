#include "c0ip/assembly.hpp"

#include <cmath>
#include <stdexcept>

#include <Eigen/IterativeLinearSolvers>
#include <Eigen/SparseCholesky>

namespace c0ip {

DofMap build_dofmap(const Mesh& mesh, const EdgeTopology& topo) {
  DofMap dofs;
  dofs.n_vertices = mesh.vertex_count();
  dofs.n_edges = topo.edge_count();

  dofs.global4e.resize(mesh.triangles.size());
  for (int t = 0; t < mesh.triangle_count(); ++t) {
    for (int j = 0; j < 3; ++j) {
      dofs.global4e[t][j] = mesh.triangles[t][j];
      dofs.global4e[t][3 + j] = dofs.n_vertices + topo.edges_of_triangle[t][j];
    }
  }

  dofs.global4s.resize(topo.edge_count());
  for (int e = 0; e < topo.edge_count(); ++e) {
    const int tp = topo.triangles_of_edge[e][0];
    const int q = topo.local_pos[e][0];
    const auto& tri_p = mesh.triangles[tp];
    const auto& edges_p = topo.edges_of_triangle[tp];
    auto& g = dofs.global4s[e];
    g[0] = tri_p[(q + 1) % 3];
    g[1] = dofs.n_vertices + e;
    g[2] = tri_p[(q + 2) % 3];
    g[3] = dofs.n_vertices + edges_p[(q + 1) % 3];
    g[4] = tri_p[q];
    g[5] = dofs.n_vertices + edges_p[(q + 2) % 3];
    if (topo.is_interior[e]) {
      const int tm = topo.triangles_of_edge[e][1];
      const int r = topo.local_pos[e][1];
      const auto& tri_m = mesh.triangles[tm];
      const auto& edges_m = topo.edges_of_triangle[tm];
      g[6] = dofs.n_vertices + edges_m[(r + 1) % 3];
      g[7] = tri_m[r];
      g[8] = dofs.n_vertices + edges_m[(r + 2) % 3];
    } else {
      // Dummy targets; boundary patches carry no contribution here.
      g[6] = g[7] = g[8] = 0;
    }
  }

  dofs.is_interior_dof.assign(dofs.total(), 1);
  for (int e = 0; e < topo.edge_count(); ++e) {
    if (topo.is_interior[e]) continue;
    dofs.is_interior_dof[topo.edge_vertices[e][0]] = 0;
    dofs.is_interior_dof[topo.edge_vertices[e][1]] = 0;
    dofs.is_interior_dof[dofs.n_vertices + e] = 0;
  }
  for (int i = 0; i < dofs.total(); ++i)
    if (dofs.is_interior_dof[i]) dofs.interior_dofs.push_back(i);
  return dofs;
}

std::vector<P2ElementData> element_data(const Mesh& mesh) {
  std::vector<P2ElementData> elements;
  elements.reserve(mesh.triangles.size());
  for (const auto& tri : mesh.triangles)
    elements.push_back(p2_element_data(mesh.coords[tri[0]], mesh.coords[tri[1]],
                                       mesh.coords[tri[2]]));
  return elements;
}

EdgePatchData edge_patch_data(const EdgeTopology& topo, const Geometry& geom, int edge,
                              const std::vector<P2ElementData>& elements) {
  EdgePatchData patch;
  patch.jump_normal.setZero();
  patch.mean_hess_binormal.setZero();

  const Vec2 nu = geom.normal[edge];
  const int tp = topo.triangles_of_edge[edge][0];
  const int q = topo.local_pos[edge][0];
  const bool interior = topo.is_interior[edge] != 0;

  // Local node (and shape) indices of the three edge nodes and of the three
  // patch nodes exclusive to each triangle.
  const std::array<int, 3> pn{(q + 1) % 3, 3 + q, (q + 2) % 3};
  const std::array<int, 3> px{3 + (q + 1) % 3, q, 3 + (q + 2) % 3};

  const auto& plus = elements[tp];
  auto grad_normal_plus = [&](int shape, int node) {
    return plus.grad_at_nodes[shape][node].dot(nu);
  };
  auto hess_binormal_plus = [&](int shape) {
    return nu.dot(plus.hessians[shape] * nu);
  };

  if (!interior) {
    for (int l = 0; l < 3; ++l) {
      for (int a = 0; a < 3; ++a) patch.jump_normal(a, l) = grad_normal_plus(pn[a], pn[l]);
      for (int a = 0; a < 3; ++a) patch.jump_normal(3 + a, l) = grad_normal_plus(px[a], pn[l]);
    }
    for (int a = 0; a < 3; ++a) patch.mean_hess_binormal(a) = hess_binormal_plus(pn[a]);
    for (int a = 0; a < 3; ++a) patch.mean_hess_binormal(3 + a) = hess_binormal_plus(px[a]);
    return patch;
  }

  const int tm = topo.triangles_of_edge[edge][1];
  const int r = topo.local_pos[edge][1];
  const std::array<int, 3> mn{(r + 2) % 3, 3 + r, (r + 1) % 3};
  const std::array<int, 3> mx{3 + (r + 1) % 3, r, 3 + (r + 2) % 3};

  const auto& minus = elements[tm];
  auto grad_normal_minus = [&](int shape, int node) {
    return minus.grad_at_nodes[shape][node].dot(nu);
  };
  auto hess_binormal_minus = [&](int shape) {
    return nu.dot(minus.hessians[shape] * nu);
  };

  for (int l = 0; l < 3; ++l) {
    for (int a = 0; a < 3; ++a)
      patch.jump_normal(a, l) = grad_normal_plus(pn[a], pn[l]) - grad_normal_minus(mn[a], mn[l]);
    for (int a = 0; a < 3; ++a)
      patch.jump_normal(3 + a, l) = grad_normal_plus(px[a], pn[l]);
    for (int a = 0; a < 3; ++a)
      patch.jump_normal(6 + a, l) = -grad_normal_minus(mx[a], mn[l]);
  }
  for (int a = 0; a < 3; ++a)
    patch.mean_hess_binormal(a) = 0.5 * (hess_binormal_plus(pn[a]) + hess_binormal_minus(mn[a]));
  for (int a = 0; a < 3; ++a) patch.mean_hess_binormal(3 + a) = 0.5 * hess_binormal_plus(px[a]);
  for (int a = 0; a < 3; ++a) patch.mean_hess_binormal(6 + a) = 0.5 * hess_binormal_minus(mx[a]);
  return patch;
}

Eigen::Matrix<double, 6, 6> local_stiffness(const P2ElementData& element, double area) {
  Eigen::Matrix<double, 6, 6> local;
  for (int a = 0; a < 6; ++a)
    for (int b = 0; b < 6; ++b)
      local(a, b) = area * element.hessians[a].cwiseProduct(element.hessians[b]).sum();
  return local;
}

Eigen::Matrix<double, 6, 1> local_rhs(const std::array<double, 3>& f_at_midpoints, double area) {
  Eigen::Matrix<double, 6, 1> local;
  local.setZero();
  for (int j = 0; j < 3; ++j) local(3 + j) = area / 3.0 * f_at_midpoints[j];
  return local;
}

Eigen::Matrix<double, 9, 9> local_jump_matrix(const EdgePatchData& patch, double edge_length) {
  return edge_length * patch.mean_hess_binormal * patch.jump_normal.col(1).transpose();
}

Eigen::Matrix<double, 9, 9> local_penalty_matrix(const EdgePatchData& patch, double sigma) {
  static constexpr std::array<double, 3> w{1.0 / 6.0, 2.0 / 3.0, 1.0 / 6.0};
  Eigen::Matrix<double, 9, 9> local;
  local.setZero();
  for (int l = 0; l < 3; ++l)
    local += w[l] * patch.jump_normal.col(l) * patch.jump_normal.col(l).transpose();
  return sigma * local;
}

AssembledSystem assemble(const Mesh& mesh, const EdgeTopology& topo, const Geometry& geom,
                         const PenaltyField& sigma, const DofMap& dofs,
                         const std::function<double(const Vec2&)>& f) {
  const int n = dofs.total();
  const auto elements = element_data(mesh);

  AssembledSystem sys;
  sys.rhs = Eigen::VectorXd::Zero(n);

  std::vector<Eigen::Triplet<double>> trip_a;
  trip_a.reserve(static_cast<std::size_t>(mesh.triangle_count()) * 36);
  std::vector<double> f_at_edge(topo.edge_count());
  for (int e = 0; e < topo.edge_count(); ++e) f_at_edge[e] = f(geom.midpoint[e]);

  for (int t = 0; t < mesh.triangle_count(); ++t) {
    const auto local = local_stiffness(elements[t], geom.area[t]);
    const auto& g = dofs.global4e[t];
    for (int a = 0; a < 6; ++a)
      for (int b = 0; b < 6; ++b) trip_a.emplace_back(g[a], g[b], local(a, b));
    const auto& edges = topo.edges_of_triangle[t];
    const auto load = local_rhs(
        {f_at_edge[edges[0]], f_at_edge[edges[1]], f_at_edge[edges[2]]}, geom.area[t]);
    for (int a = 0; a < 6; ++a) sys.rhs(g[a]) += load(a);
  }

  std::vector<Eigen::Triplet<double>> trip_j;
  std::vector<Eigen::Triplet<double>> trip_c;
  trip_j.reserve(static_cast<std::size_t>(topo.edge_count()) * 81);
  trip_c.reserve(static_cast<std::size_t>(topo.edge_count()) * 81);
  for (int e = 0; e < topo.edge_count(); ++e) {
    const auto patch = edge_patch_data(topo, geom, e, elements);
    const auto local_j = local_jump_matrix(patch, geom.length[e]);
    const auto local_c = local_penalty_matrix(patch, sigma.sigma[e]);
    const auto& g = dofs.global4s[e];
    const int extent = topo.is_interior[e] ? 9 : 6;
    for (int a = 0; a < extent; ++a) {
      for (int b = 0; b < extent; ++b) {
        trip_j.emplace_back(g[a], g[b], local_j(a, b));
        trip_c.emplace_back(g[a], g[b], local_c(a, b));
      }
    }
  }

  sys.stiffness.resize(n, n);
  sys.stiffness.setFromTriplets(trip_a.begin(), trip_a.end());
  sys.jump.resize(n, n);
  sys.jump.setFromTriplets(trip_j.begin(), trip_j.end());
  sys.penalty.resize(n, n);
  sys.penalty.setFromTriplets(trip_c.begin(), trip_c.end());

  sys.system = sys.stiffness - sys.jump - SparseMat(sys.jump.transpose()) + sys.penalty;
  sys.norm_matrix = sys.stiffness + sys.penalty;
  return sys;
}

SparseMat restrict_matrix(const SparseMat& m, const std::vector<int>& dofs) {
  std::vector<int> compact(m.rows(), -1);
  for (std::size_t i = 0; i < dofs.size(); ++i) compact[dofs[i]] = static_cast<int>(i);
  std::vector<Eigen::Triplet<double>> trips;
  trips.reserve(m.nonZeros());
  for (int col = 0; col < m.outerSize(); ++col) {
    if (compact[col] < 0) continue;
    for (SparseMat::InnerIterator it(m, col); it; ++it) {
      if (compact[it.row()] < 0) continue;
      trips.emplace_back(compact[it.row()], compact[col], it.value());
    }
  }
  SparseMat out(static_cast<int>(dofs.size()), static_cast<int>(dofs.size()));
  out.setFromTriplets(trips.begin(), trips.end());
  return out;
}

DiscreteSolution restrict_and_solve(const AssembledSystem& system, const DofMap& dofs,
                                    const SolveOptions& opts) {
  const auto& interior = dofs.interior_dofs;
  DiscreteSolution solution;
  solution.coefficients = Eigen::VectorXd::Zero(dofs.total());
  if (interior.empty()) return solution;

  const SparseMat bii = restrict_matrix(system.system, interior);
  Eigen::VectorXd bi(interior.size());
  for (std::size_t i = 0; i < interior.size(); ++i) bi(i) = system.rhs(interior[i]);

  Eigen::VectorXd x;
  const double rhs_norm = bi.norm();
  if (static_cast<int>(interior.size()) <= opts.direct_max_dofs) {
    Eigen::SimplicialLDLT<SparseMat> ldlt(bii);
    if (ldlt.info() != Eigen::Success)
      throw std::runtime_error(
          "sparse factorization failed; the system is not positive definite "
          "(penalty prefactor a > 1 required)");
    x = ldlt.solve(bi);
    // One refinement step keeps the residual near round-off.
    x += ldlt.solve(Eigen::VectorXd(bi - bii * x));
  } else {
    Eigen::ConjugateGradient<SparseMat, Eigen::Lower | Eigen::Upper,
                             Eigen::DiagonalPreconditioner<double>> cg;
    cg.setTolerance(opts.cg_tolerance);
    cg.setMaxIterations(10 * static_cast<int>(interior.size()));
    cg.compute(bii);
    x = cg.solve(bi);
    if (cg.info() != Eigen::Success)
      throw std::runtime_error(
          "conjugate gradients did not converge; the system is not positive "
          "definite (penalty prefactor a > 1 required)");
  }

  solution.relative_residual =
      rhs_norm > 0.0 ? (bii * x - bi).norm() / rhs_norm : (bii * x - bi).norm();
  if (!x.allFinite())
    throw std::runtime_error("linear solve produced non-finite values (a > 1 required)");
  for (std::size_t i = 0; i < interior.size(); ++i) solution.coefficients(interior[i]) = x(i);
  return solution;
}

}  // namespace c0ip
