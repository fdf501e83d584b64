#pragma once

#include <span>
#include <vector>

#include "c0ip/mesh.hpp"

namespace c0ip {

/// Prefactor a and polynomial degree k of the edge-local penalty weights.
/// Stability is guaranteed for a > 1; a in (0, 1] is accepted but flagged.
struct PenaltyConfig {
  double a = 2.0;
  int k = 2;
};

struct PenaltyField {
  std::vector<double> sigma;  // per edge
  double kappa = 0.0;         // guaranteed stability constant 1 - 1/sqrt(a)
  bool unjustified_a = false; // a <= 1
};

double stability_kappa(double a);

/// Edge weight on triangle meshes: an interior edge collects one contribution
/// 3 a k(k-1) h_E^2 / (8 |T|) from each adjacent triangle; a boundary edge
/// gets 3 a k(k-1) h_E^2 / (2 |T+|).
PenaltyField sigma_triangle(const PenaltyConfig& cfg, const Geometry& geom,
                            const EdgeTopology& topo);

/// Variant with a per-triangle polynomial degree; reduces to sigma_triangle
/// when all degrees agree.
PenaltyField sigma_variable_degree(double a, const std::vector<int>& degree_per_triangle,
                                   const Geometry& geom, const EdgeTopology& topo);

/// Edge weight on rectangle meshes, stated per edge: h is the edge length,
/// area_minus < 0 marks a boundary edge.
struct RectangleEdge {
  double h = 0.0;
  double area_plus = 0.0;
  double area_minus = -1.0;
};

PenaltyField sigma_rectangle(double a, int k, std::span<const RectangleEdge> edges);

}  // namespace c0ip
