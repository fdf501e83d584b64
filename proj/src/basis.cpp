#include "c0ip/basis.hpp"

#include <cmath>
#include <stdexcept>

namespace c0ip {

std::array<Vec2, 3> barycentric_gradients(const Vec2& p0, const Vec2& p1, const Vec2& p2) {
  Eigen::Matrix3d lhs;
  lhs << 1.0, 1.0, 1.0,
         p0.x(), p1.x(), p2.x(),
         p0.y(), p1.y(), p2.y();
  const double scale = std::max({(p1 - p0).norm(), (p2 - p1).norm(), (p0 - p2).norm()});
  if (std::abs(lhs.determinant()) <= 1e-14 * scale * scale * std::max(scale, 1.0))
    throw std::invalid_argument("degenerate triangle in barycentric_gradients");
  Eigen::Matrix<double, 3, 2> rhs;
  rhs << 0.0, 0.0,
         1.0, 0.0,
         0.0, 1.0;
  const Eigen::Matrix<double, 3, 2> grads = lhs.partialPivLu().solve(rhs);
  return {Vec2(grads(0, 0), grads(0, 1)), Vec2(grads(1, 0), grads(1, 1)),
          Vec2(grads(2, 0), grads(2, 1))};
}

std::array<std::array<double, 3>, 6> p2_node_barycentric() {
  return {{{1.0, 0.0, 0.0},
           {0.0, 1.0, 0.0},
           {0.0, 0.0, 1.0},
           {0.0, 0.5, 0.5},
           {0.5, 0.0, 0.5},
           {0.5, 0.5, 0.0}}};
}

std::array<double, 6> p2_values(const std::array<double, 3>& lambda) {
  std::array<double, 6> phi;
  for (int j = 0; j < 3; ++j) {
    phi[j] = lambda[j] * (2.0 * lambda[j] - 1.0);
    phi[3 + j] = 4.0 * lambda[(j + 1) % 3] * lambda[(j + 2) % 3];
  }
  return phi;
}

std::array<Vec2, 6> p2_gradients(const std::array<Vec2, 3>& grad_lambda,
                                 const std::array<double, 3>& lambda) {
  std::array<Vec2, 6> grad;
  for (int j = 0; j < 3; ++j) {
    const int k = (j + 1) % 3;
    const int l = (j + 2) % 3;
    grad[j] = (4.0 * lambda[j] - 1.0) * grad_lambda[j];
    grad[3 + j] = 4.0 * (lambda[k] * grad_lambda[l] + lambda[l] * grad_lambda[k]);
  }
  return grad;
}

std::array<std::array<Vec2, 6>, 6> p2_gradients_at_nodes(const std::array<Vec2, 3>& grad_lambda) {
  const auto nodes = p2_node_barycentric();
  std::array<std::array<Vec2, 6>, 6> table;
  for (int node = 0; node < 6; ++node) {
    const auto grads = p2_gradients(grad_lambda, nodes[node]);
    for (int shape = 0; shape < 6; ++shape) table[shape][node] = grads[shape];
  }
  return table;
}

std::array<Eigen::Matrix2d, 6> p2_hessians(const std::array<Vec2, 3>& grad_lambda) {
  std::array<Eigen::Matrix2d, 6> hess;
  for (int j = 0; j < 3; ++j) {
    const int k = (j + 1) % 3;
    const int l = (j + 2) % 3;
    hess[j] = 4.0 * grad_lambda[j] * grad_lambda[j].transpose();
    hess[3 + j] = 4.0 * (grad_lambda[k] * grad_lambda[l].transpose() +
                         grad_lambda[l] * grad_lambda[k].transpose());
  }
  return hess;
}

P2ElementData p2_element_data(const Vec2& p0, const Vec2& p1, const Vec2& p2) {
  P2ElementData data;
  data.grad_lambda = barycentric_gradients(p0, p1, p2);
  data.grad_at_nodes = p2_gradients_at_nodes(data.grad_lambda);
  data.hessians = p2_hessians(data.grad_lambda);
  return data;
}

}  // namespace c0ip
