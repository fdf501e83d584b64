#include "c0ip/penalty.hpp"

#include <cmath>
#include <stdexcept>

namespace c0ip {

double stability_kappa(double a) { return 1.0 - 1.0 / std::sqrt(a); }

namespace {

void validate(double a, int k) {
  if (!(a > 0.0)) throw std::invalid_argument("penalty prefactor a must be positive");
  if (k < 2) throw std::invalid_argument("polynomial degree k must be at least 2");
}

}  // namespace

PenaltyField sigma_triangle(const PenaltyConfig& cfg, const Geometry& geom,
                            const EdgeTopology& topo) {
  validate(cfg.a, cfg.k);
  PenaltyField field;
  field.kappa = stability_kappa(cfg.a);
  field.unjustified_a = cfg.a <= 1.0;
  const double base = 3.0 * cfg.a * cfg.k * (cfg.k - 1);
  field.sigma.resize(topo.edge_count());
  for (int e = 0; e < topo.edge_count(); ++e) {
    const double h2 = geom.length[e] * geom.length[e];
    const int tp = topo.triangles_of_edge[e][0];
    const int tm = topo.triangles_of_edge[e][1];
    field.sigma[e] = topo.is_interior[e]
                         ? base * h2 / 8.0 * (1.0 / geom.area[tp] + 1.0 / geom.area[tm])
                         : base * h2 / (2.0 * geom.area[tp]);
  }
  return field;
}

PenaltyField sigma_variable_degree(double a, const std::vector<int>& degree_per_triangle,
                                   const Geometry& geom, const EdgeTopology& topo) {
  if (degree_per_triangle.size() != geom.area.size())
    throw std::invalid_argument("one polynomial degree per triangle required");
  for (int k : degree_per_triangle) validate(a, k);
  PenaltyField field;
  field.kappa = stability_kappa(a);
  field.unjustified_a = a <= 1.0;
  field.sigma.resize(topo.edge_count());
  for (int e = 0; e < topo.edge_count(); ++e) {
    const double h2 = geom.length[e] * geom.length[e];
    const int tp = topo.triangles_of_edge[e][0];
    const int tm = topo.triangles_of_edge[e][1];
    const double kp = degree_per_triangle[tp] * (degree_per_triangle[tp] - 1.0);
    if (topo.is_interior[e]) {
      const double km = degree_per_triangle[tm] * (degree_per_triangle[tm] - 1.0);
      field.sigma[e] = 3.0 * a * h2 / 8.0 * (kp / geom.area[tp] + km / geom.area[tm]);
    } else {
      field.sigma[e] = 3.0 * a * kp * h2 / (2.0 * geom.area[tp]);
    }
  }
  return field;
}

PenaltyField sigma_rectangle(double a, int k, std::span<const RectangleEdge> edges) {
  validate(a, k);
  PenaltyField field;
  field.kappa = stability_kappa(a);
  field.unjustified_a = a <= 1.0;
  field.sigma.reserve(edges.size());
  const double base = a * (k - 1.0) * (k - 1.0);
  for (const auto& edge : edges) {
    if (!(edge.h > 0.0) || !(edge.area_plus > 0.0))
      throw std::invalid_argument("rectangle edge needs positive length and area");
    const double h2 = edge.h * edge.h;
    if (edge.area_minus > 0.0)
      field.sigma.push_back(base * h2 * (1.0 / edge.area_plus + 1.0 / edge.area_minus));
    else
      field.sigma.push_back(4.0 * base * h2 / edge.area_plus);
  }
  return field;
}

}  // namespace c0ip
