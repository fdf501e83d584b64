#include "c0ip/mesh.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace c0ip {

double signed_area(const Vec2& a, const Vec2& b, const Vec2& c) {
  return 0.5 * ((b.x() - a.x()) * (c.y() - a.y()) - (c.x() - a.x()) * (b.y() - a.y()));
}

namespace {

void check_vertex_indices(const Mesh& mesh) {
  const int nv = mesh.vertex_count();
  for (int t = 0; t < mesh.triangle_count(); ++t) {
    const auto& tri = mesh.triangles[t];
    for (int j = 0; j < 3; ++j) {
      if (tri[j] < 0 || tri[j] >= nv)
        throw std::invalid_argument("triangle " + std::to_string(t) +
                                    " references invalid vertex " + std::to_string(tri[j]));
    }
    if (tri[0] == tri[1] || tri[1] == tri[2] || tri[0] == tri[2])
      throw std::invalid_argument("triangle " + std::to_string(t) + " has repeated vertices");
  }
}

double longest_edge_sq(const Mesh& mesh, int t) {
  const auto& tri = mesh.triangles[t];
  double best = 0.0;
  for (int j = 0; j < 3; ++j) {
    const Vec2 d = mesh.coords[tri[(j + 2) % 3]] - mesh.coords[tri[(j + 1) % 3]];
    best = std::max(best, d.squaredNorm());
  }
  return best;
}

}  // namespace

Mesh fix_local_enumeration(Mesh mesh) {
  check_vertex_indices(mesh);
  for (int t = 0; t < mesh.triangle_count(); ++t) {
    auto& tri = mesh.triangles[t];
    const double area2 =
        2.0 * signed_area(mesh.coords[tri[0]], mesh.coords[tri[1]], mesh.coords[tri[2]]);
    const double scale = longest_edge_sq(mesh, t);
    if (std::abs(area2) <= 1e-14 * scale)
      throw std::invalid_argument("triangle " + std::to_string(t) +
                                  " is degenerate (collinear vertices)");
    if (area2 < 0.0) std::swap(tri[1], tri[2]);
  }
  return mesh;
}

EdgeTopology build_topology(const Mesh& mesh) {
  check_vertex_indices(mesh);
  const int nt = mesh.triangle_count();

  // Unique sorted endpoint pairs, enumerated lexicographically.
  std::vector<std::array<int, 2>> pairs;
  pairs.reserve(static_cast<std::size_t>(nt) * 3);
  for (int t = 0; t < nt; ++t) {
    const auto& tri = mesh.triangles[t];
    for (int j = 0; j < 3; ++j) {
      int a = tri[(j + 1) % 3];
      int b = tri[(j + 2) % 3];
      if (a > b) std::swap(a, b);
      pairs.push_back({a, b});
    }
  }
  std::sort(pairs.begin(), pairs.end());
  pairs.erase(std::unique(pairs.begin(), pairs.end()), pairs.end());

  EdgeTopology topo;
  topo.edge_vertices = std::move(pairs);
  const int ne = topo.edge_count();
  topo.edges_of_triangle.assign(nt, {-1, -1, -1});
  topo.triangles_of_edge.assign(ne, {-1, -1});
  topo.local_pos.assign(ne, {-1, -1});
  topo.is_interior.assign(ne, 0);

  for (int t = 0; t < nt; ++t) {
    const auto& tri = mesh.triangles[t];
    for (int j = 0; j < 3; ++j) {
      int a = tri[(j + 1) % 3];
      int b = tri[(j + 2) % 3];
      if (a > b) std::swap(a, b);
      const std::array<int, 2> key{a, b};
      const auto it = std::lower_bound(topo.edge_vertices.begin(), topo.edge_vertices.end(), key);
      const int e = static_cast<int>(it - topo.edge_vertices.begin());
      topo.edges_of_triangle[t][j] = e;
      auto& adj = topo.triangles_of_edge[e];
      auto& pos = topo.local_pos[e];
      if (adj[0] < 0) {
        adj[0] = t;
        pos[0] = j;
      } else if (adj[1] < 0) {
        adj[1] = t;
        pos[1] = j;
      } else {
        throw std::invalid_argument("non-conforming mesh: edge (" + std::to_string(a) + "," +
                                    std::to_string(b) + ") is shared by more than two triangles");
      }
    }
  }

  // Triangles were visited in ascending order, so adj[0] already is the
  // smaller adjacent index and acts as T+.
  for (int e = 0; e < ne; ++e) {
    topo.is_interior[e] = topo.triangles_of_edge[e][1] >= 0 ? 1 : 0;
    if (topo.is_interior[e]) ++topo.interior_count;
  }
  return topo;
}

Geometry compute_geometry(const Mesh& mesh, const EdgeTopology& topo) {
  Geometry geom;
  const int nt = mesh.triangle_count();
  const int ne = topo.edge_count();
  geom.area.resize(nt);
  geom.length.resize(ne);
  geom.normal.resize(ne);
  geom.midpoint.resize(ne);

  for (int t = 0; t < nt; ++t) {
    const auto& tri = mesh.triangles[t];
    geom.area[t] = signed_area(mesh.coords[tri[0]], mesh.coords[tri[1]], mesh.coords[tri[2]]);
  }

  for (int e = 0; e < ne; ++e) {
    const Vec2 a = mesh.coords[topo.edge_vertices[e][0]];
    const Vec2 b = mesh.coords[topo.edge_vertices[e][1]];
    const Vec2 tangent = b - a;
    geom.length[e] = tangent.norm();
    geom.midpoint[e] = 0.5 * (a + b);
    Vec2 n(tangent.y(), -tangent.x());
    n /= geom.length[e];
    const int tp = topo.triangles_of_edge[e][0];
    const auto& tri = mesh.triangles[tp];
    const Vec2 centroid =
        (mesh.coords[tri[0]] + mesh.coords[tri[1]] + mesh.coords[tri[2]]) / 3.0;
    if (n.dot(geom.midpoint[e] - centroid) < 0.0) n = -n;
    geom.normal[e] = n;
  }
  return geom;
}

void assign_refinement_edges(Mesh& mesh) {
  const EdgeTopology topo = build_topology(mesh);
  mesh.refinement_edge.assign(mesh.triangles.size(), 0);
  for (int t = 0; t < mesh.triangle_count(); ++t) {
    const auto& tri = mesh.triangles[t];
    int best = 0;
    double best_len = -1.0;
    int best_edge = -1;
    for (int j = 0; j < 3; ++j) {
      const Vec2 d = mesh.coords[tri[(j + 2) % 3]] - mesh.coords[tri[(j + 1) % 3]];
      const double len = d.squaredNorm();
      const int e = topo.edges_of_triangle[t][j];
      if (len > best_len || (len == best_len && e < best_edge)) {
        best = j;
        best_len = len;
        best_edge = e;
      }
    }
    mesh.refinement_edge[t] = best;
  }
}

Mesh refine_nvb(const Mesh& input, const std::vector<int>& marked) {
  Mesh mesh = input;
  if (mesh.refinement_edge.size() != mesh.triangles.size()) assign_refinement_edges(mesh);
  const EdgeTopology topo = build_topology(mesh);
  const int nt = mesh.triangle_count();
  const int ne = topo.edge_count();

  for (int t : marked)
    if (t < 0 || t >= nt)
      throw std::invalid_argument("marked triangle index " + std::to_string(t) + " out of range");

  // Mark the refinement edge of every marked triangle, then close: whenever a
  // triangle has any marked edge, its refinement edge must be marked too.
  std::vector<char> edge_marked(ne, 0);
  std::deque<int> work;
  auto mark_edge = [&](int e) {
    if (!edge_marked[e]) {
      edge_marked[e] = 1;
      for (int side = 0; side < 2; ++side) {
        const int t = topo.triangles_of_edge[e][side];
        if (t >= 0) work.push_back(t);
      }
    }
  };
  for (int t : marked) mark_edge(topo.edges_of_triangle[t][mesh.refinement_edge[t]]);
  while (!work.empty()) {
    const int t = work.front();
    work.pop_front();
    const int ref = topo.edges_of_triangle[t][mesh.refinement_edge[t]];
    if (edge_marked[ref]) continue;
    bool any = false;
    for (int j = 0; j < 3; ++j) any = any || edge_marked[topo.edges_of_triangle[t][j]];
    if (any) mark_edge(ref);
  }

  Mesh out;
  out.coords = mesh.coords;
  std::vector<int> midpoint_vertex(ne, -1);
  for (int e = 0; e < ne; ++e) {
    if (!edge_marked[e]) continue;
    midpoint_vertex[e] = out.vertex_count();
    out.coords.push_back(0.5 * (mesh.coords[topo.edge_vertices[e][0]] +
                                mesh.coords[topo.edge_vertices[e][1]]));
  }

  auto emit = [&out](int v0, int v1, int v2, int ref) {
    out.triangles.push_back({v0, v1, v2});
    out.refinement_edge.push_back(ref);
  };
  // Bisect (a, b, c) at the edge (b, c) opposite the peak a; the midpoint
  // becomes the newest vertex of both children and each child's refinement
  // edge is the parent edge it inherits.
  auto bisect = [&](int a, int b, int c, int mid, bool split_ab, bool split_ca,
                    int mid_ab, int mid_ca) {
    if (split_ab) {
      emit(mid_ab, mid, a, 0);
      emit(mid_ab, b, mid, 0);
    } else {
      emit(mid, a, b, 0);
    }
    if (split_ca) {
      emit(mid_ca, mid, c, 0);
      emit(mid_ca, a, mid, 0);
    } else {
      emit(mid, c, a, 0);
    }
  };

  for (int t = 0; t < nt; ++t) {
    const auto& tri = mesh.triangles[t];
    const int j = mesh.refinement_edge[t];
    const int ref_edge = topo.edges_of_triangle[t][j];
    if (!edge_marked[ref_edge]) {
      out.triangles.push_back(tri);
      out.refinement_edge.push_back(j);
      continue;
    }
    const int a = tri[j];            // peak
    const int b = tri[(j + 1) % 3];  // refinement edge runs b -> c
    const int c = tri[(j + 2) % 3];
    const int e_ab = topo.edges_of_triangle[t][(j + 2) % 3];  // opposite c
    const int e_ca = topo.edges_of_triangle[t][(j + 1) % 3];  // opposite b
    bisect(a, b, c, midpoint_vertex[ref_edge], edge_marked[e_ab] != 0, edge_marked[e_ca] != 0,
           midpoint_vertex[e_ab], midpoint_vertex[e_ca]);
  }
  return out;
}

Mesh refine_uniform(Mesh mesh, int rounds) {
  for (int r = 0; r < rounds; ++r) {
    std::vector<int> all(mesh.triangles.size());
    for (int t = 0; t < mesh.triangle_count(); ++t) all[t] = t;
    mesh = refine_nvb(mesh, all);
  }
  return mesh;
}

double min_angle(const Mesh& mesh) {
  double best = 4.0;
  for (const auto& tri : mesh.triangles) {
    for (int j = 0; j < 3; ++j) {
      const Vec2 u = mesh.coords[tri[(j + 1) % 3]] - mesh.coords[tri[j]];
      const Vec2 v = mesh.coords[tri[(j + 2) % 3]] - mesh.coords[tri[j]];
      const double cross = u.x() * v.y() - u.y() * v.x();
      best = std::min(best, std::atan2(std::abs(cross), u.dot(v)));
    }
  }
  return best;
}

Mesh read_mesh(std::istream& in) {
  int nv = 0, nt = 0;
  if (!(in >> nv >> nt) || nv < 3 || nt < 1)
    throw std::runtime_error("mesh header: expected \"nv nt\" with nv >= 3, nt >= 1");
  Mesh mesh;
  mesh.coords.resize(nv);
  for (int v = 0; v < nv; ++v) {
    if (!(in >> mesh.coords[v].x() >> mesh.coords[v].y()))
      throw std::runtime_error("mesh vertex " + std::to_string(v) + ": malformed coordinates");
  }
  mesh.triangles.resize(nt);
  for (int t = 0; t < nt; ++t) {
    auto& tri = mesh.triangles[t];
    if (!(in >> tri[0] >> tri[1] >> tri[2]))
      throw std::runtime_error("mesh triangle " + std::to_string(t) + ": malformed indices");
  }
  check_vertex_indices(mesh);
  return mesh;
}

Mesh read_mesh_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open mesh file: " + path);
  return read_mesh(in);
}

void write_mesh(const Mesh& mesh, std::ostream& out) {
  out << mesh.vertex_count() << ' ' << mesh.triangle_count() << '\n';
  char buf[64];
  for (const auto& p : mesh.coords) {
    std::snprintf(buf, sizeof buf, "%.17g %.17g", p.x(), p.y());
    out << buf << '\n';
  }
  for (const auto& tri : mesh.triangles)
    out << tri[0] << ' ' << tri[1] << ' ' << tri[2] << '\n';
}

void write_mesh_file(const Mesh& mesh, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open mesh file for writing: " + path);
  write_mesh(mesh, out);
}

}  // namespace c0ip
