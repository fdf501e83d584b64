#include <doctest.h>

#include <cmath>

#include "c0ip/benchmarks.hpp"
#include "c0ip/mesh.hpp"
#include "c0ip/penalty.hpp"

using namespace c0ip;

namespace {

struct MeshData {
  Mesh mesh;
  EdgeTopology topo;
  Geometry geom;
};

MeshData right_isosceles_pair() {
  // Unit square split along the diagonal: two right isosceles triangles with
  // legs 1 and area 1/2.
  MeshData data;
  data.mesh.coords = {{0, 0}, {1, 0}, {1, 1}, {0, 1}};
  data.mesh.triangles = {{0, 1, 2}, {0, 2, 3}};
  data.topo = build_topology(data.mesh);
  data.geom = compute_geometry(data.mesh, data.topo);
  return data;
}

int find_edge(const MeshData& data, int v0, int v1) {
  for (int e = 0; e < data.topo.edge_count(); ++e)
    if (data.topo.edge_vertices[e] == std::array<int, 2>{std::min(v0, v1), std::max(v0, v1)})
      return e;
  return -1;
}

}  // namespace

TEST_CASE("boundary values on right isosceles triangles") {
  const auto data = right_isosceles_pair();
  for (double a : {1.0, 2.0, 5.0}) {
    const auto field = sigma_triangle({a, 2}, data.geom, data.topo);
    // Legs (catheti) on the boundary carry 6a.
    CHECK(field.sigma[find_edge(data, 0, 1)] == doctest::Approx(6.0 * a).epsilon(1e-13));
    CHECK(field.sigma[find_edge(data, 2, 3)] == doctest::Approx(6.0 * a).epsilon(1e-13));
  }
}

TEST_CASE("boundary hypotenuse carries 12a") {
  // Lone right isosceles triangle with legs h: its hypotenuse has length
  // h sqrt(2) and area h^2/2.
  const double h = 0.75;
  MeshData data;
  data.mesh.coords = {{0, 0}, {h, 0}, {0, h}};
  data.mesh.triangles = {{0, 1, 2}};
  data.topo = build_topology(data.mesh);
  data.geom = compute_geometry(data.mesh, data.topo);
  const double a = 3.0;
  const auto field = sigma_triangle({a, 2}, data.geom, data.topo);
  CHECK(field.sigma[find_edge(data, 1, 2)] == doctest::Approx(12.0 * a).epsilon(1e-13));
  CHECK(field.sigma[find_edge(data, 0, 1)] == doctest::Approx(6.0 * a).epsilon(1e-13));
}

TEST_CASE("interior cathetus between congruent right isosceles triangles") {
  // Two triangles with legs 1 sharing a leg: areas 1/2 each, h_E = 1.
  MeshData data;
  data.mesh.coords = {{0, 0}, {1, 0}, {0, 1}, {-1, 0}};
  data.mesh.triangles = {{0, 1, 2}, {0, 2, 3}};
  data.topo = build_topology(data.mesh);
  data.geom = compute_geometry(data.mesh, data.topo);
  const int shared = find_edge(data, 0, 2);
  REQUIRE(data.topo.is_interior[shared]);
  // Direct evaluation: (3 a k(k-1) h^2 / 8)(1/|T+| + 1/|T-|) = 3a for k = 2.
  const auto field = sigma_triangle({2.0, 2}, data.geom, data.topo);
  CHECK(field.sigma[shared] == doctest::Approx(6.0).epsilon(1e-13));
}

TEST_CASE("interior diagonal of the unit square at k = 2, a = 2") {
  const auto data = right_isosceles_pair();
  const auto field = sigma_triangle({2.0, 2}, data.geom, data.topo);
  // h^2 = 2, areas 1/2: (3*2*2*2/8)*(2+2) = 12.
  CHECK(field.sigma[find_edge(data, 0, 2)] == doctest::Approx(12.0).epsilon(1e-13));
}

TEST_CASE("kappa amounts to 1 - 1/sqrt(a)") {
  CHECK(stability_kappa(2.0) == doctest::Approx(0.292893).epsilon(1e-5));
  CHECK(stability_kappa(4.0) == doctest::Approx(0.5));
  const auto data = right_isosceles_pair();
  const auto field = sigma_triangle({2.0, 2}, data.geom, data.topo);
  CHECK(field.kappa == doctest::Approx(1.0 - 1.0 / std::sqrt(2.0)));
}

TEST_CASE("a at or below one is flagged, invalid parameters are rejected") {
  const auto data = right_isosceles_pair();
  CHECK(sigma_triangle({1.0, 2}, data.geom, data.topo).unjustified_a);
  CHECK_FALSE(sigma_triangle({1.5, 2}, data.geom, data.topo).unjustified_a);
  CHECK_THROWS_AS(sigma_triangle({-1.0, 2}, data.geom, data.topo), std::invalid_argument);
  CHECK_THROWS_AS(sigma_triangle({2.0, 1}, data.geom, data.topo), std::invalid_argument);
}

TEST_CASE("variable degrees reduce to the uniform formula") {
  const auto data = right_isosceles_pair();
  for (int k : {2, 3, 4}) {
    const auto uniform = sigma_triangle({1.7, k}, data.geom, data.topo);
    const auto variable = sigma_variable_degree(1.7, {k, k}, data.geom, data.topo);
    for (int e = 0; e < data.topo.edge_count(); ++e)
      CHECK(variable.sigma[e] == doctest::Approx(uniform.sigma[e]).epsilon(1e-14));
  }
}

TEST_CASE("variable degrees: direct evaluation of the mixed case") {
  // Interior edge with h = 1, areas 1/2, degrees 2 and 3 at a = 1:
  // (3/8)(2*2 + 6*2) = 6.
  MeshData data;
  data.mesh.coords = {{0, 0}, {1, 0}, {0, 1}, {-1, 0}};
  data.mesh.triangles = {{0, 1, 2}, {0, 2, 3}};
  data.topo = build_topology(data.mesh);
  data.geom = compute_geometry(data.mesh, data.topo);
  const int shared = find_edge(data, 0, 2);
  const auto field = sigma_variable_degree(1.0, {2, 3}, data.geom, data.topo);
  CHECK(field.sigma[shared] == doctest::Approx(6.0).epsilon(1e-13));
  // Boundary edge of the degree-3 triangle with h = 1, area 1/2: 18.
  const int boundary = find_edge(data, 0, 3);
  CHECK(field.sigma[boundary] == doctest::Approx(18.0).epsilon(1e-13));
}

TEST_CASE("rectangle formula") {
  // Unit squares on both sides, h = 1, k = 2, a = 1.
  const RectangleEdge interior{1.0, 1.0, 1.0};
  const RectangleEdge boundary{1.0, 1.0, -1.0};
  const auto field = sigma_rectangle(1.0, 2, std::array{interior, boundary});
  CHECK(field.sigma[0] == doctest::Approx(2.0).epsilon(1e-14));
  CHECK(field.sigma[1] == doctest::Approx(4.0).epsilon(1e-14));
  CHECK_THROWS_AS(sigma_rectangle(1.0, 1, std::array{interior}), std::invalid_argument);
}

TEST_CASE("monotonicity in a, k, and edge length") {
  const auto data = right_isosceles_pair();
  const auto base = sigma_triangle({2.0, 2}, data.geom, data.topo);
  const auto larger_a = sigma_triangle({3.0, 2}, data.geom, data.topo);
  const auto larger_k = sigma_triangle({2.0, 3}, data.geom, data.topo);
  for (int e = 0; e < data.topo.edge_count(); ++e) {
    CHECK(larger_a.sigma[e] > base.sigma[e]);
    CHECK(larger_k.sigma[e] > base.sigma[e]);
  }
  // Longer edge at fixed areas: scale h_E only through the formula's h^2.
  Geometry stretched = data.geom;
  for (auto& len : stretched.length) len *= 1.5;
  const auto longer = sigma_triangle({2.0, 2}, stretched, data.topo);
  for (int e = 0; e < data.topo.edge_count(); ++e) CHECK(longer.sigma[e] > base.sigma[e]);
}

TEST_CASE("dimensionless: uniform coordinate scaling leaves sigma invariant") {
  for (auto id : {BenchmarkId::lshape, BenchmarkId::fourslit}) {
    Mesh mesh = make_benchmark(id).initial_mesh;
    const auto topo = build_topology(mesh);
    const auto geom = compute_geometry(mesh, topo);
    const auto base = sigma_triangle({2.0, 2}, geom, topo);

    Mesh scaled = mesh;
    for (auto& p : scaled.coords) p *= 3.7;
    const auto scaled_geom = compute_geometry(scaled, topo);
    const auto scaled_field = sigma_triangle({2.0, 2}, scaled_geom, topo);
    for (int e = 0; e < topo.edge_count(); ++e)
      CHECK(scaled_field.sigma[e] == doctest::Approx(base.sigma[e]).epsilon(1e-12));
  }
}

TEST_CASE("limit consistency between interior and boundary formulas") {
  // With one area growing without bound the interior value approaches a
  // quarter of the boundary value of the remaining triangle.
  const double h = 1.3, area_plus = 0.4;
  const double boundary = 3.0 * 2.0 * 2.0 * h * h / (2.0 * area_plus);
  for (double area_minus : {1e6, 1e9, 1e12}) {
    const double interior =
        3.0 * 2.0 * 2.0 * h * h / 8.0 * (1.0 / area_plus + 1.0 / area_minus);
    CHECK(interior == doctest::Approx(0.25 * boundary).epsilon(1e-5));
  }
}
