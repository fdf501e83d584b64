#pragma once

#include <array>

#include <Eigen/Dense>

#include "c0ip/mesh.hpp"

namespace c0ip {

/// Quadratic Lagrange element on a triangle. Local nodes 0..5 are the
/// vertices P0,P1,P2 followed by the edge midpoints M0,M1,M2, where M_j lies
/// on the edge opposite P_j. Shape function j is dual to node j.
struct P2ElementData {
  std::array<Vec2, 3> grad_lambda;                    // constant per triangle
  std::array<std::array<Vec2, 6>, 6> grad_at_nodes;   // [shape][node]
  std::array<Eigen::Matrix2d, 6> hessians;            // constant per triangle
};

/// Gradients of the barycentric coordinates, from the 3x3 linear system that
/// couples them to the vertex positions. Throws on a degenerate triangle.
std::array<Vec2, 3> barycentric_gradients(const Vec2& p0, const Vec2& p1, const Vec2& p2);

std::array<std::array<Vec2, 6>, 6> p2_gradients_at_nodes(const std::array<Vec2, 3>& grad_lambda);

std::array<Eigen::Matrix2d, 6> p2_hessians(const std::array<Vec2, 3>& grad_lambda);

P2ElementData p2_element_data(const Vec2& p0, const Vec2& p1, const Vec2& p2);

/// Barycentric coordinates of the six local nodes.
std::array<std::array<double, 3>, 6> p2_node_barycentric();

/// Shape function values at a point given its barycentric coordinates.
std::array<double, 6> p2_values(const std::array<double, 3>& lambda);

/// Shape function gradients at a point given its barycentric coordinates.
std::array<Vec2, 6> p2_gradients(const std::array<Vec2, 3>& grad_lambda,
                                 const std::array<double, 3>& lambda);

}  // namespace c0ip
