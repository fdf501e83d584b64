#pragma once

#include <array>
#include <iosfwd>
#include <string>
#include <vector>

#include <Eigen/Dense>

namespace c0ip {

using Vec2 = Eigen::Vector2d;

/// Triangulation with newest-vertex-bisection state. Vertex indices are
/// 0-based; every triangle lists its vertices counter-clockwise. Slit domains
/// use geometrically coincident but topologically distinct vertices, so the
/// edges on opposite sides of a slit stay distinct boundary edges.
struct Mesh {
  std::vector<Vec2> coords;
  std::vector<std::array<int, 3>> triangles;
  /// Local index in {0,1,2} of each triangle's refinement edge, where edge j
  /// lies opposite vertex j. Empty until assign_refinement_edges() ran.
  std::vector<int> refinement_edge;

  int vertex_count() const { return static_cast<int>(coords.size()); }
  int triangle_count() const { return static_cast<int>(triangles.size()); }
};

double signed_area(const Vec2& a, const Vec2& b, const Vec2& c);

/// Reorders clockwise triangles to counter-clockwise. Throws on a degenerate
/// (collinear) triangle, naming its index.
Mesh fix_local_enumeration(Mesh mesh);

/// Edge tables derived from the triangle list. Edge enumeration is
/// lexicographic in the sorted endpoint pair; for an interior edge the
/// adjacent triangle with the smaller index acts as T+, which fixes the sign
/// of the edge normal.
struct EdgeTopology {
  std::vector<std::array<int, 2>> edge_vertices;      // endpoints, ascending
  std::vector<std::array<int, 3>> edges_of_triangle;  // edge j opposite vertex j
  std::vector<std::array<int, 2>> triangles_of_edge;  // {T+, T-}; T- = -1 on boundary
  std::vector<std::array<int, 2>> local_pos;          // {q, r}; r = -1 on boundary
  std::vector<char> is_interior;
  int interior_count = 0;

  int edge_count() const { return static_cast<int>(edge_vertices.size()); }
};

EdgeTopology build_topology(const Mesh& mesh);

struct Geometry {
  std::vector<double> area;    // per triangle
  std::vector<double> length;  // per edge
  std::vector<Vec2> normal;    // per edge, unit, outward with respect to T+
  std::vector<Vec2> midpoint;  // per edge
};

Geometry compute_geometry(const Mesh& mesh, const EdgeTopology& topo);

/// Initial refinement-edge assignment: the longest edge of each triangle,
/// ties broken by the smaller global edge index. Strict compatibility of the
/// assignment is not verified; the closure in refine_nvb() conforms any case.
void assign_refinement_edges(Mesh& mesh);

/// Bisects every marked triangle at least once and completes the hanging
/// refinements, so the result is conforming. New vertices are appended in
/// ascending order of the split edges, which keeps the output deterministic.
Mesh refine_nvb(const Mesh& mesh, const std::vector<int>& marked);

Mesh refine_uniform(Mesh mesh, int rounds);

double min_angle(const Mesh& mesh);  // radians

/// Plain-text format: "nv nt" then nv lines "x y" then nt lines "i j k"
/// (0-based, counter-clockwise). Coordinates are written with 17 significant
/// digits so a round trip reproduces them bit for bit.
Mesh read_mesh(std::istream& in);
Mesh read_mesh_file(const std::string& path);
void write_mesh(const Mesh& mesh, std::ostream& out);
void write_mesh_file(const Mesh& mesh, const std::string& path);

}  // namespace c0ip
