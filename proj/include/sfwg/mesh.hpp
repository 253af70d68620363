#ifndef SFWG_MESH_HPP
#define SFWG_MESH_HPP

#include <Eigen/Dense>

#include <array>
#include <string>
#include <vector>

#include "sfwg/quadrature.hpp"

namespace sfwg {

/// Mesh edge. Endpoints are stored with v0 < v1; that orientation also fixes
/// the arclength parameterization of the trace space, so both incident
/// elements see identical edge basis functions.
struct Edge {
  int v0 = -1;
  int v1 = -1;
  std::array<int, 2> incident_elements = {-1, -1};
  bool is_boundary = false;
  double length = 0.0;
  Point2 midpoint = Point2::Zero();
};

/// Convex polygonal element with vertices in counterclockwise order.
/// edge_ids[i] joins vertex_ids[i] to vertex_ids[i+1]; outward_normals[i] is
/// the unit outward normal on that edge.
struct Element {
  std::vector<int> vertex_ids;
  std::vector<int> edge_ids;
  std::vector<Point2> outward_normals;
  Point2 centroid = Point2::Zero();
  double area = 0.0;
  double diameter = 0.0;

  int n_edges() const { return static_cast<int>(vertex_ids.size()); }
};

/// Polygonal partition of the unit square (0,1)^2.
struct Mesh {
  std::vector<Point2> vertices;
  std::vector<Edge> edges;
  std::vector<Element> elements;
  std::vector<int> boundary_edge_ids;
  double h = 0.0;  // max element diameter

  int n_vertices() const { return static_cast<int>(vertices.size()); }
  int n_edges() const { return static_cast<int>(edges.size()); }
  int n_elements() const { return static_cast<int>(elements.size()); }

  /// Vertex coordinates of an element, in CCW cycle order.
  std::vector<Point2> element_vertices(int elem) const;
  /// Local index of a global edge within an element's cycle.
  int local_edge_index(int elem, int edge) const;
};

/// Builds edges, incidence, normals and all derived metrics from vertex
/// coordinates and CCW element vertex cycles. Edge ids are assigned in order
/// of first appearance while scanning elements, which makes the numbering a
/// deterministic function of the element order.
Mesh build_mesh(std::vector<Point2> vertices, const std::vector<std::vector<int>>& cells);

/// n x n grid of squares of side 1/n, each split into two triangles by the
/// diagonal from the lower-left to the upper-right corner.
Mesh generate_uniform_triangular(int n);

/// n x n grid of axis-aligned squares of side 1/n.
Mesh generate_uniform_rectangular(int n);

/// Cut-corner family: the n x n grid with every corner at an interior grid
/// vertex cut at distance cut_ratio/n along both incident grid edges. This
/// produces octagons in the interior, pentagons/hexagons along the boundary
/// and small diamonds centered at the interior grid vertices.
Mesh generate_polygonal(int n, double cut_ratio = 0.25);

/// Checks every mesh/element/edge invariant; returns one message per
/// violation, naming the entity and the failed invariant. Never throws.
std::vector<std::string> validate(const Mesh& mesh);

/// Mesh with elements listed in the given order (perm[i] = old index of new
/// element i). Vertices and edges keep their ids; used by determinism checks.
Mesh permute_elements(const Mesh& mesh, const std::vector<int>& perm);

}  // namespace sfwg

#endif
