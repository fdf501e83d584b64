#include <doctest.h>

#include <cmath>
#include <numbers>
#include <set>
#include <sstream>

#include "c0ip/benchmarks.hpp"
#include "c0ip/mesh.hpp"
#include "oracles.hpp"

using namespace c0ip;

namespace {

Mesh two_triangle_square() {
  Mesh mesh;
  mesh.coords = {{0, 0}, {1, 0}, {1, 1}, {0, 1}};
  mesh.triangles = {{0, 1, 2}, {0, 2, 3}};
  return mesh;
}

Mesh single_reference_triangle() {
  Mesh mesh;
  mesh.coords = {{0, 0}, {1, 0}, {0, 1}};
  mesh.triangles = {{0, 1, 2}};
  return mesh;
}

}  // namespace

TEST_CASE("fix_local_enumeration reorders clockwise triangles") {
  Mesh mesh;
  mesh.coords = {{0, 0}, {0, 1}, {1, 0}};
  mesh.triangles = {{0, 1, 2}};  // clockwise
  const Mesh fixed = fix_local_enumeration(mesh);
  CHECK(signed_area(fixed.coords[fixed.triangles[0][0]], fixed.coords[fixed.triangles[0][1]],
                    fixed.coords[fixed.triangles[0][2]]) > 0.0);
  const std::set<int> verts(fixed.triangles[0].begin(), fixed.triangles[0].end());
  CHECK(verts == std::set<int>{0, 1, 2});
}

TEST_CASE("fix_local_enumeration keeps counter-clockwise meshes unchanged") {
  const Mesh mesh = single_reference_triangle();
  const Mesh fixed = fix_local_enumeration(mesh);
  CHECK(fixed.triangles == mesh.triangles);
}

TEST_CASE("fix_local_enumeration rejects collinear triples naming the triangle") {
  Mesh mesh;
  mesh.coords = {{0, 0}, {1, 0}, {2, 0}};
  mesh.triangles = {{0, 1, 2}};
  CHECK_THROWS_WITH_AS(fix_local_enumeration(mesh), doctest::Contains("triangle 0"),
                       std::invalid_argument);
}

TEST_CASE("topology of the two-triangle square") {
  const auto topo = build_topology(two_triangle_square());
  CHECK(topo.edge_count() == 5);
  CHECK(topo.interior_count == 1);
  for (int e = 0; e < topo.edge_count(); ++e) {
    if (!topo.is_interior[e]) continue;
    CHECK(topo.edge_vertices[e] == std::array<int, 2>{0, 2});
    CHECK(topo.triangles_of_edge[e] == std::array<int, 2>{0, 1});
  }
}

TEST_CASE("topology of a single triangle") {
  const auto topo = build_topology(single_reference_triangle());
  CHECK(topo.edge_count() == 3);
  CHECK(topo.interior_count == 0);
}

TEST_CASE("topology of the L-shaped initial mesh") {
  const Benchmark bench = make_benchmark(BenchmarkId::lshape);
  CHECK(bench.initial_mesh.vertex_count() == 8);
  CHECK(bench.initial_mesh.triangle_count() == 6);
  const auto topo = build_topology(bench.initial_mesh);
  CHECK(topo.edge_count() == 13);
  CHECK(topo.interior_count == 5);
  // Euler relation for the simply connected domain.
  CHECK(bench.initial_mesh.vertex_count() - topo.edge_count() +
            bench.initial_mesh.triangle_count() ==
        1);
}

TEST_CASE("edge convention: edge j lies opposite vertex j") {
  const Mesh mesh = two_triangle_square();
  const auto topo = build_topology(mesh);
  for (int t = 0; t < mesh.triangle_count(); ++t) {
    for (int j = 0; j < 3; ++j) {
      const int e = topo.edges_of_triangle[t][j];
      const int opposite = mesh.triangles[t][j];
      CHECK(topo.edge_vertices[e][0] != opposite);
      CHECK(topo.edge_vertices[e][1] != opposite);
    }
  }
}

TEST_CASE("non-conforming input is rejected") {
  Mesh mesh;
  mesh.coords = {{0, 0}, {1, 0}, {0, 1}, {1, 1}, {-1, 0.5}};
  mesh.triangles = {{0, 1, 2}, {1, 3, 2}, {0, 2, 4}, {0, 2, 3}};  // edge (0,2) used thrice
  CHECK_THROWS_AS(build_topology(mesh), std::invalid_argument);
}

TEST_CASE("geometry of the reference triangle") {
  const Mesh mesh = single_reference_triangle();
  const auto topo = build_topology(mesh);
  const auto geom = compute_geometry(mesh, topo);
  CHECK(geom.area[0] == doctest::Approx(0.5));
  for (int e = 0; e < topo.edge_count(); ++e) {
    CHECK(geom.normal[e].norm() == doctest::Approx(1.0).epsilon(1e-14));
    if (topo.edge_vertices[e] == std::array<int, 2>{1, 2}) {
      CHECK(geom.length[e] == doctest::Approx(std::sqrt(2.0)));
      CHECK(geom.normal[e].x() == doctest::Approx(1.0 / std::sqrt(2.0)));
      CHECK(geom.normal[e].y() == doctest::Approx(1.0 / std::sqrt(2.0)));
    }
  }
}

TEST_CASE("geometry: areas sum to the square") {
  const Mesh mesh = two_triangle_square();
  const auto topo = build_topology(mesh);
  const auto geom = compute_geometry(mesh, topo);
  CHECK(geom.area[0] + geom.area[1] == doctest::Approx(1.0).epsilon(1e-14));
}

TEST_CASE("geometry: triangle areas match the boundary shoelace") {
  for (auto id : {BenchmarkId::lshape, BenchmarkId::cusp, BenchmarkId::dumbbell,
                  BenchmarkId::fourslit}) {
    const Mesh mesh = make_benchmark(id).initial_mesh;
    const auto topo = build_topology(mesh);
    const auto geom = compute_geometry(mesh, topo);
    double total = 0.0;
    for (double a : geom.area) total += a;
    CHECK(total == doctest::Approx(testing::boundary_shoelace_area(mesh, topo)).epsilon(1e-12));
  }
}

TEST_CASE("normals point out of the first adjacent triangle") {
  const Mesh mesh = refine_uniform(make_benchmark(BenchmarkId::lshape).initial_mesh, 2);
  const auto topo = build_topology(mesh);
  const auto geom = compute_geometry(mesh, topo);
  for (int e = 0; e < topo.edge_count(); ++e) {
    const int tp = topo.triangles_of_edge[e][0];
    const auto& tri = mesh.triangles[tp];
    const Vec2 centroid = (mesh.coords[tri[0]] + mesh.coords[tri[1]] + mesh.coords[tri[2]]) / 3.0;
    CHECK(geom.normal[e].dot(geom.midpoint[e] - centroid) > 0.0);
  }
}

TEST_CASE("refine_nvb bisects a lone marked triangle into two children") {
  Mesh mesh = single_reference_triangle();
  assign_refinement_edges(mesh);
  const Mesh refined = refine_nvb(mesh, {0});
  CHECK(refined.triangle_count() == 2);
  CHECK(refined.vertex_count() == 4);
  // Hypotenuse midpoint shared by both children.
  CHECK(refined.coords[3].x() == doctest::Approx(0.5));
  CHECK(refined.coords[3].y() == doctest::Approx(0.5));
  CHECK_NOTHROW(build_topology(refined));
}

TEST_CASE("refine_nvb with empty marking returns the identical mesh") {
  Mesh mesh = two_triangle_square();
  assign_refinement_edges(mesh);
  const Mesh refined = refine_nvb(mesh, {});
  CHECK(refined.triangles == mesh.triangles);
  CHECK(refined.coords.size() == mesh.coords.size());
  CHECK(refined.refinement_edge == mesh.refinement_edge);
}

TEST_CASE("marked triangles never survive refinement") {
  Mesh mesh = make_benchmark(BenchmarkId::lshape).initial_mesh;
  const Mesh refined = refine_nvb(mesh, {0, 3});
  for (int t : {0, 3}) {
    for (const auto& tri : refined.triangles) {
      const bool same = tri == mesh.triangles[t];
      CHECK_FALSE(same);
    }
  }
  CHECK_NOTHROW(build_topology(refined));
}

TEST_CASE("five uniform rounds of the L-shape stay shape regular") {
  Mesh mesh = make_benchmark(BenchmarkId::lshape).initial_mesh;
  constexpr double kQuarterPi = std::numbers::pi / 4.0;
  double floor_angle = min_angle(mesh);
  int count = mesh.triangle_count();
  for (int round = 0; round < 5; ++round) {
    mesh = refine_uniform(mesh, 1);
    floor_angle = std::min(floor_angle, min_angle(mesh));
  }
  CHECK(mesh.triangle_count() >= count * (1 << 5));
  CHECK(mesh.triangle_count() <= count * (1 << 10));
  // All descendants of the right-isosceles start stay right-isosceles.
  CHECK(floor_angle == doctest::Approx(kQuarterPi).epsilon(1e-12));
}

TEST_CASE("area additivity under refinement") {
  Mesh mesh = make_benchmark(BenchmarkId::cusp).initial_mesh;
  auto total_area = [](const Mesh& m) {
    const auto topo = build_topology(m);
    const auto geom = compute_geometry(m, topo);
    double total = 0.0;
    for (double a : geom.area) total += a;
    return total;
  };
  const double before = total_area(mesh);
  const Mesh refined = refine_nvb(mesh, {0, 2, 5});
  CHECK(total_area(refined) == doctest::Approx(before).epsilon(1e-12));
}

TEST_CASE("conformity after adaptive-style refinement cascades") {
  Mesh mesh = make_benchmark(BenchmarkId::fourslit).initial_mesh;
  for (int round = 0; round < 6; ++round) {
    std::vector<int> marked;
    for (int t = 0; t < mesh.triangle_count(); t += 3) marked.push_back(t);
    mesh = refine_nvb(mesh, marked);
    const auto topo = build_topology(mesh);
    for (int e = 0; e < topo.edge_count(); ++e) {
      const int adjacent = topo.is_interior[e] ? 2 : 1;
      int found = (topo.triangles_of_edge[e][0] >= 0 ? 1 : 0) +
                  (topo.triangles_of_edge[e][1] >= 0 ? 1 : 0);
      CHECK(found == adjacent);
    }
  }
}

TEST_CASE("determinism: identical input gives identical topology and refinement") {
  const Mesh mesh = make_benchmark(BenchmarkId::dumbbell).initial_mesh;
  const auto topo_a = build_topology(mesh);
  const auto topo_b = build_topology(mesh);
  CHECK(topo_a.edge_vertices == topo_b.edge_vertices);
  CHECK(topo_a.edges_of_triangle == topo_b.edges_of_triangle);
  const Mesh ra = refine_nvb(mesh, {1, 5, 9});
  const Mesh rb = refine_nvb(mesh, {1, 5, 9});
  CHECK(ra.triangles == rb.triangles);
  REQUIRE(ra.coords.size() == rb.coords.size());
  for (std::size_t v = 0; v < ra.coords.size(); ++v) {
    CHECK(ra.coords[v].x() == rb.coords[v].x());
    CHECK(ra.coords[v].y() == rb.coords[v].y());
  }
}

TEST_CASE("mesh text format round trip is bitwise") {
  const Mesh mesh = make_benchmark(BenchmarkId::cusp).initial_mesh;
  std::stringstream stream;
  write_mesh(mesh, stream);
  const Mesh reread = read_mesh(stream);
  REQUIRE(reread.coords.size() == mesh.coords.size());
  for (std::size_t v = 0; v < mesh.coords.size(); ++v) {
    CHECK(reread.coords[v].x() == mesh.coords[v].x());
    CHECK(reread.coords[v].y() == mesh.coords[v].y());
  }
  CHECK(reread.triangles == mesh.triangles);
}

TEST_CASE("mesh reader rejects malformed input") {
  std::stringstream bad_header("2 1\n0 0\n1 0\n0 1 2\n");
  CHECK_THROWS_AS(read_mesh(bad_header), std::runtime_error);
  std::stringstream bad_index("3 1\n0 0\n1 0\n0 1\n0 1 7\n");
  CHECK_THROWS_AS(read_mesh(bad_index), std::invalid_argument);
}

TEST_CASE("slit meshes keep both slit sides as distinct boundary edges") {
  const Mesh mesh = make_benchmark(BenchmarkId::fourslit).initial_mesh;
  const auto topo = build_topology(mesh);
  // Slit tip-to-boundary segments appear twice, once per side, both boundary.
  int slit_edges = 0;
  for (int e = 0; e < topo.edge_count(); ++e) {
    const Vec2 a = mesh.coords[topo.edge_vertices[e][0]];
    const Vec2 b = mesh.coords[topo.edge_vertices[e][1]];
    const bool on_left_slit = std::abs(a.y()) < 1e-12 && std::abs(b.y()) < 1e-12 &&
                              std::min(a.x(), b.x()) >= -1.0 - 1e-12 &&
                              std::max(a.x(), b.x()) <= -0.5 + 1e-12;
    if (on_left_slit) {
      ++slit_edges;
      CHECK_FALSE(static_cast<bool>(topo.is_interior[e]));
    }
  }
  CHECK(slit_edges == 2);
}
