#pragma once

#include <array>

#include "c0ip/mesh.hpp"

namespace c0ip {

struct QuadraturePoint {
  std::array<double, 3> lambda;  // barycentric
  double weight;                 // sums to 1 over the rule
};

/// Seven-point rule on the triangle, exact for polynomials of degree 5.
const std::array<QuadraturePoint, 7>& triangle_rule_degree5();

/// Gauss-Legendre nodes and weights on [0, 1].
const std::array<std::array<double, 2>, 2>& gauss_rule_2();  // degree 3
const std::array<std::array<double, 2>, 3>& gauss_rule_3();  // degree 5

}  // namespace c0ip
