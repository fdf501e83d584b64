#include "c0ip/estimator.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace c0ip {

EstimatorField estimate(const Mesh& mesh, const EdgeTopology& topo, const Geometry& geom,
                        const PenaltyField& sigma, const DofMap& dofs,
                        const Eigen::VectorXd& coefficients,
                        const std::function<double(const Vec2&)>& f) {
  const int nt = mesh.triangle_count();
  const int ne = topo.edge_count();
  const auto elements = element_data(mesh);

  // Constant Hessian of the discrete solution per triangle.
  std::vector<Eigen::Matrix2d> hess_u(nt);
  for (int t = 0; t < nt; ++t) {
    hess_u[t].setZero();
    for (int a = 0; a < 6; ++a)
      hess_u[t] += coefficients(dofs.global4e[t][a]) * elements[t].hessians[a];
  }

  static constexpr std::array<double, 3> w{1.0 / 6.0, 2.0 / 3.0, 1.0 / 6.0};
  std::vector<double> penalty_term(ne, 0.0);
  std::vector<double> hess_jump_term(ne, 0.0);
  for (int e = 0; e < ne; ++e) {
    const auto patch = edge_patch_data(topo, geom, e, elements);
    Eigen::Matrix<double, 9, 1> u_patch;
    for (int a = 0; a < 9; ++a) u_patch(a) = coefficients(dofs.global4s[e][a]);
    if (!topo.is_interior[e]) u_patch.tail<3>().setZero();

    // sigma^2/h ||[grad u . nu]||^2 via the exact three-node rule.
    double quad = 0.0;
    for (int l = 0; l < 3; ++l) {
      const double jump = patch.jump_normal.col(l).dot(u_patch);
      quad += w[l] * jump * jump;
    }
    penalty_term[e] = sigma.sigma[e] * sigma.sigma[e] * quad;

    if (topo.is_interior[e]) {
      const int tp = topo.triangles_of_edge[e][0];
      const int tm = topo.triangles_of_edge[e][1];
      const Vec2 nu = geom.normal[e];
      const double jump = nu.dot((hess_u[tp] - hess_u[tm]) * nu);
      hess_jump_term[e] = geom.length[e] * geom.length[e] * jump * jump;
    }
  }

  EstimatorField field;
  field.eta2.resize(nt);
  double total = 0.0;
  for (int t = 0; t < nt; ++t) {
    const auto& edges = topo.edges_of_triangle[t];
    double load = 0.0;
    for (int j = 0; j < 3; ++j) {
      const double fe = f(geom.midpoint[edges[j]]);
      load += fe * fe;
    }
    double value = geom.area[t] * geom.area[t] * (geom.area[t] / 3.0) * load;
    for (int j = 0; j < 3; ++j)
      value += penalty_term[edges[j]] + hess_jump_term[edges[j]];
    field.eta2[t] = value;
    total += value;
  }
  field.eta_total = std::sqrt(total);
  return field;
}

std::vector<int> dorfler_mark(const std::vector<double>& eta2, double theta) {
  if (!(theta > 0.0) || theta > 1.0)
    throw std::invalid_argument("bulk parameter theta must lie in (0, 1]");
  std::vector<int> order(eta2.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    if (eta2[a] != eta2[b]) return eta2[a] > eta2[b];
    return a < b;
  });
  // Totalling in the same sorted order keeps theta = 1 exact in floating
  // point.
  double total = 0.0;
  for (int t : order) total += eta2[t];
  const double target = theta * total;

  std::vector<int> marked;
  double cum = 0.0;
  for (int t : order) {
    if (cum >= target) break;
    if (eta2[t] <= 0.0) break;
    marked.push_back(t);
    cum += eta2[t];
  }
  return marked;
}

}  // namespace c0ip
