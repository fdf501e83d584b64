#include "c0ip/benchmarks.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "c0ip/quadrature.hpp"

namespace c0ip {

namespace {

constexpr double kPi = std::numbers::pi;

void check_alpha(double alpha) {
  if (std::abs(alpha - 1.0) < 1e-8 || std::abs(alpha + 1.0) < 1e-8)
    throw std::invalid_argument("angular factor undefined for alpha near +-1");
}

}  // namespace

BenchmarkId benchmark_from_name(const std::string& name) {
  if (name == "lshape") return BenchmarkId::lshape;
  if (name == "cusp") return BenchmarkId::cusp;
  if (name == "dumbbell") return BenchmarkId::dumbbell;
  if (name == "fourslit") return BenchmarkId::fourslit;
  if (name == "square_smooth") return BenchmarkId::square_smooth;
  throw std::invalid_argument("unknown benchmark: " + name +
                              " (expected lshape|cusp|dumbbell|fourslit|square_smooth)");
}

std::string benchmark_name(BenchmarkId id) {
  switch (id) {
    case BenchmarkId::lshape: return "lshape";
    case BenchmarkId::cusp: return "cusp";
    case BenchmarkId::dumbbell: return "dumbbell";
    case BenchmarkId::fourslit: return "fourslit";
    case BenchmarkId::square_smooth: return "square_smooth";
  }
  throw std::logic_error("unreachable benchmark id");
}

double g_angular(double phi, double alpha, double omega, GVariant variant) {
  check_alpha(alpha);
  const double am = alpha - 1.0;
  const double ap = alpha + 1.0;
  const double bracket_omega = std::sin(am * omega) / am - std::sin(ap * omega) / ap;
  const double cos_omega = std::cos(am * omega) - std::cos(ap * omega);
  const double cos_phi = std::cos(am * phi) - std::cos(ap * phi);
  const double second_denom = variant == GVariant::published ? am : ap;
  const double sin_phi = std::sin(am * phi) / am - std::sin(ap * phi) / second_denom;
  return bracket_omega * cos_phi - sin_phi * cos_omega;
}

Jet4 g_angular(const Jet4& phi, double alpha, double omega, GVariant variant) {
  check_alpha(alpha);
  const double am = alpha - 1.0;
  const double ap = alpha + 1.0;
  const double bracket_omega = std::sin(am * omega) / am - std::sin(ap * omega) / ap;
  const double cos_omega = std::cos(am * omega) - std::cos(ap * omega);
  const double second_denom = variant == GVariant::published ? am : ap;
  const Jet4 cos_phi = cos(am * phi) - cos(ap * phi);
  const Jet4 sin_phi = (1.0 / am) * sin(am * phi) - (1.0 / second_denom) * sin(ap * phi);
  return bracket_omega * cos_phi - cos_omega * sin_phi;
}

double noncharacteristic_residual(double alpha, double omega) {
  const double s = std::sin(alpha * omega);
  const double t = std::sin(omega);
  return std::abs(s * s - alpha * alpha * t * t);
}

ExactSolution corner_singular_solution(double alpha, double omega, double angle_offset,
                                       GVariant variant) {
  check_alpha(alpha);
  auto eval = [alpha, omega, angle_offset, variant](const Vec2& p) -> Jet4 {
    const Jet4 x = Jet4::variable_x(p.x());
    const Jet4 y = Jet4::variable_y(p.y());
    const Jet4 r2 = x * x + y * y;
    if (!(r2.value() > 1e-28))
      throw std::domain_error("singular solution evaluated at the reentrant corner");
    const Jet4 radial = pow(r2, 0.5 * (1.0 + alpha));
    Jet4 phi = atan2(y, x);
    if (phi.value() < angle_offset - 1e-12) phi = phi + 2.0 * kPi;
    const Jet4 angular = g_angular(phi - angle_offset, alpha, omega, variant);
    const Jet4 cx = Jet4::constant(1.0) - x * x;
    const Jet4 cy = Jet4::constant(1.0) - y * y;
    return (cx * cx) * (cy * cy) * radial * angular;
  };
  ExactSolution exact;
  exact.value = [eval](const Vec2& p) { return eval(p).value(); };
  exact.gradient = [eval](const Vec2& p) { return eval(p).gradient(); };
  exact.hessian = [eval](const Vec2& p) { return eval(p).hessian(); };
  exact.bilaplacian = [eval](const Vec2& p) { return eval(p).bilaplacian(); };
  return exact;
}

ExactSolution smooth_manufactured() {
  // u = G(x) H(y) with G(t) = H(t) = t^2 (1-t)^2.
  auto g0 = [](double t) { return t * t * (1.0 - t) * (1.0 - t); };
  auto g1 = [](double t) { return 2.0 * t - 6.0 * t * t + 4.0 * t * t * t; };
  auto g2 = [](double t) { return 2.0 - 12.0 * t + 12.0 * t * t; };
  ExactSolution exact;
  exact.value = [=](const Vec2& p) { return g0(p.x()) * g0(p.y()); };
  exact.gradient = [=](const Vec2& p) {
    return Vec2(g1(p.x()) * g0(p.y()), g0(p.x()) * g1(p.y()));
  };
  exact.hessian = [=](const Vec2& p) {
    Eigen::Matrix2d h;
    h << g2(p.x()) * g0(p.y()), g1(p.x()) * g1(p.y()),
         g1(p.x()) * g1(p.y()), g0(p.x()) * g2(p.y());
    return h;
  };
  exact.bilaplacian = [=](const Vec2& p) {
    return 24.0 * g0(p.y()) + 2.0 * g2(p.x()) * g2(p.y()) + 24.0 * g0(p.x());
  };
  return exact;
}

namespace {

int find_vertex(const Mesh& mesh, double x, double y) {
  for (int v = 0; v < mesh.vertex_count(); ++v) {
    if (std::abs(mesh.coords[v].x() - x) < 1e-12 && std::abs(mesh.coords[v].y() - y) < 1e-12)
      return v;
  }
  throw std::logic_error("benchmark mesh vertex lookup failed");
}

/// Splits the mesh along a slit at one vertex: triangles on the selected
/// side are rewired to a geometrically coincident copy.
void duplicate_vertex(Mesh& mesh, int vertex,
                      const std::function<bool(const Vec2&)>& take_copy) {
  const int copy = mesh.vertex_count();
  mesh.coords.push_back(mesh.coords[vertex]);
  for (auto& tri : mesh.triangles) {
    if (tri[0] != vertex && tri[1] != vertex && tri[2] != vertex) continue;
    const Vec2 centroid =
        (mesh.coords[tri[0]] + mesh.coords[tri[1]] + mesh.coords[tri[2]]) / 3.0;
    if (!take_copy(centroid)) continue;
    for (int j = 0; j < 3; ++j)
      if (tri[j] == vertex) tri[j] = copy;
  }
}

/// Structured grid of squares, each split along one diagonal with the
/// orientation alternating in a checkerboard pattern.
Mesh checkerboard_grid(double x0, double y0, int nx, int ny, double h,
                       const std::function<bool(int, int)>& keep_cell) {
  Mesh mesh;
  std::vector<int> vertex_id(static_cast<std::size_t>(nx + 1) * (ny + 1), -1);
  auto grid_index = [nx](int i, int j) { return j * (nx + 1) + i; };
  auto vertex = [&](int i, int j) {
    int& id = vertex_id[grid_index(i, j)];
    if (id < 0) {
      id = mesh.vertex_count();
      mesh.coords.emplace_back(x0 + i * h, y0 + j * h);
    }
    return id;
  };
  for (int j = 0; j < ny; ++j) {
    for (int i = 0; i < nx; ++i) {
      if (!keep_cell(i, j)) continue;
      const int bl = vertex(i, j);
      const int br = vertex(i + 1, j);
      const int tr = vertex(i + 1, j + 1);
      const int tl = vertex(i, j + 1);
      if ((i + j) % 2 == 0) {
        mesh.triangles.push_back({bl, br, tl});
        mesh.triangles.push_back({br, tr, tl});
      } else {
        mesh.triangles.push_back({bl, br, tr});
        mesh.triangles.push_back({bl, tr, tl});
      }
    }
  }
  return mesh;
}

Mesh lshape_mesh() {
  Mesh mesh;
  mesh.coords = {{-1, -1}, {-1, 0}, {-1, 1}, {0, -1}, {0, 0}, {0, 1}, {1, -1}, {1, 0}};
  mesh.triangles = {{4, 3, 6}, {4, 6, 7}, {4, 0, 3}, {4, 1, 0}, {4, 2, 1}, {4, 5, 2}};
  return mesh;
}

Mesh cusp_mesh() {
  Mesh mesh;
  mesh.coords = {{-1, -1}, {-1, 0}, {-1, 1}, {0, -1}, {0, 0},
                 {0, 1},   {1, -1}, {1, 0},  {1, 1}};
  mesh.triangles = {{4, 3, 6}, {4, 6, 7}, {4, 0, 3}, {4, 1, 0},
                    {4, 2, 1}, {4, 5, 2}, {4, 8, 5}};
  return mesh;
}

Mesh square_mesh() {
  Mesh mesh;
  mesh.coords = {{0, 0}, {1, 0}, {1, 1}, {0, 1}};
  mesh.triangles = {{0, 1, 2}, {0, 2, 3}};
  return mesh;
}

/// Two 2x2 blocks joined by a thin channel along the bottom, with a slit cut
/// into the left block from its boundary to the block center.
Mesh dumbbell_mesh() {
  const double h = 0.25;
  Mesh mesh = checkerboard_grid(-1.0, -1.0, 24, 8, h, [](int i, int j) {
    return !(i >= 8 && i <= 15 && j >= 1);
  });
  for (double x : {-1.0, -0.75, -0.5, -0.25}) {
    duplicate_vertex(mesh, find_vertex(mesh, x, 0.0),
                     [](const Vec2& c) { return c.y() < 0.0; });
  }
  return mesh;
}

/// Unit square scaled to (-1,1)^2 with one slit reaching in from the middle
/// of each side.
Mesh fourslit_mesh() {
  Mesh mesh = checkerboard_grid(-1.0, -1.0, 4, 4, 0.5, [](int, int) { return true; });
  duplicate_vertex(mesh, find_vertex(mesh, -1.0, 0.0),
                   [](const Vec2& c) { return c.y() < 0.0; });
  duplicate_vertex(mesh, find_vertex(mesh, 1.0, 0.0),
                   [](const Vec2& c) { return c.y() < 0.0; });
  duplicate_vertex(mesh, find_vertex(mesh, 0.0, -1.0),
                   [](const Vec2& c) { return c.x() < 0.0; });
  duplicate_vertex(mesh, find_vertex(mesh, 0.0, 1.0),
                   [](const Vec2& c) { return c.x() < 0.0; });
  return mesh;
}

}  // namespace

Mesh lshape_uniform_grid(int cells_per_side) {
  if (cells_per_side < 1) throw std::invalid_argument("grid needs at least one cell per side");
  const int n = cells_per_side;
  Mesh mesh;
  const double h = 1.0 / n;
  // Vertex ids on the (2n+1)^2 lattice over [-1,1]^2; the removed quadrant
  // keeps its lattice slots unused except along the reentrant edges.
  std::vector<int> ids(static_cast<std::size_t>(2 * n + 1) * (2 * n + 1), -1);
  auto vertex = [&](int i, int j) {
    int& id = ids[static_cast<std::size_t>(j) * (2 * n + 1) + i];
    if (id < 0) {
      id = mesh.vertex_count();
      mesh.coords.emplace_back(-1.0 + i * h, -1.0 + j * h);
    }
    return id;
  };
  for (int j = 0; j < 2 * n; ++j) {
    for (int i = 0; i < 2 * n; ++i) {
      if (i >= n && j >= n) continue;  // removed quadrant
      const int bl = vertex(i, j);
      const int br = vertex(i + 1, j);
      const int tr = vertex(i + 1, j + 1);
      const int tl = vertex(i, j + 1);
      mesh.triangles.push_back({bl, br, tr});
      mesh.triangles.push_back({bl, tr, tl});
    }
  }
  assign_refinement_edges(mesh);
  return mesh;
}

Benchmark make_benchmark(BenchmarkId id, GVariant variant) {
  Benchmark bench;
  bench.id = id;
  bench.name = benchmark_name(id);
  switch (id) {
    case BenchmarkId::lshape:
      bench.initial_mesh = lshape_mesh();
      bench.alpha = kLshapeAlpha;
      bench.omega = 1.5 * kPi;
      bench.has_exact = true;
      bench.exact = corner_singular_solution(bench.alpha, bench.omega, 0.5 * kPi, variant);
      bench.rhs = bench.exact->bilaplacian;
      break;
    case BenchmarkId::cusp:
      bench.initial_mesh = cusp_mesh();
      bench.alpha = kCuspAlpha;
      bench.omega = 1.75 * kPi;
      bench.has_exact = true;
      bench.exact = corner_singular_solution(bench.alpha, bench.omega, 0.25 * kPi, variant);
      bench.rhs = bench.exact->bilaplacian;
      break;
    case BenchmarkId::dumbbell:
      bench.initial_mesh = dumbbell_mesh();
      bench.rhs = [](const Vec2&) { return 1.0; };
      break;
    case BenchmarkId::fourslit:
      bench.initial_mesh = fourslit_mesh();
      bench.rhs = [](const Vec2&) { return 1.0; };
      break;
    case BenchmarkId::square_smooth:
      bench.initial_mesh = square_mesh();
      bench.has_exact = true;
      bench.exact = smooth_manufactured();
      bench.rhs = bench.exact->bilaplacian;
      break;
  }
  bench.initial_mesh = fix_local_enumeration(std::move(bench.initial_mesh));
  assign_refinement_edges(bench.initial_mesh);
  return bench;
}

double energy_error(const Mesh& mesh, const Geometry& geom, const DofMap& dofs,
                    const SparseMat& penalty_matrix, const Eigen::VectorXd& coefficients,
                    const ExactSolution& exact) {
  const auto elements = element_data(mesh);
  const auto& rule = triangle_rule_degree5();

  double err2 = coefficients.dot(penalty_matrix * coefficients);
  for (int t = 0; t < mesh.triangle_count(); ++t) {
    Eigen::Matrix2d hess_u = Eigen::Matrix2d::Zero();
    for (int a = 0; a < 6; ++a)
      hess_u += coefficients(dofs.global4e[t][a]) * elements[t].hessians[a];
    const auto& tri = mesh.triangles[t];
    double local = 0.0;
    for (const auto& qp : rule) {
      const Vec2 p = qp.lambda[0] * mesh.coords[tri[0]] + qp.lambda[1] * mesh.coords[tri[1]] +
                     qp.lambda[2] * mesh.coords[tri[2]];
      const Eigen::Matrix2d diff = exact.hessian(p) - hess_u;
      local += qp.weight * diff.squaredNorm();
    }
    err2 += geom.area[t] * local;
  }
  return std::sqrt(err2);
}

}  // namespace c0ip
