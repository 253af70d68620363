#include "sfwg/mesh.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <sstream>
#include <stdexcept>

namespace sfwg {

std::vector<Point2> Mesh::element_vertices(int elem) const {
  const Element& el = elements[elem];
  std::vector<Point2> out;
  out.reserve(el.vertex_ids.size());
  for (int v : el.vertex_ids) out.push_back(vertices[v]);
  return out;
}

int Mesh::local_edge_index(int elem, int edge) const {
  const Element& el = elements[elem];
  for (int i = 0; i < el.n_edges(); ++i) {
    if (el.edge_ids[i] == edge) return i;
  }
  return -1;
}

Mesh build_mesh(std::vector<Point2> vertices, const std::vector<std::vector<int>>& cells) {
  Mesh mesh;
  mesh.vertices = std::move(vertices);
  mesh.elements.resize(cells.size());

  std::map<std::pair<int, int>, int> edge_of;
  for (std::size_t e = 0; e < cells.size(); ++e) {
    const std::vector<int>& cyc = cells[e];
    if (cyc.size() < 3) throw std::invalid_argument("build_mesh: element with < 3 vertices");
    Element& el = mesh.elements[e];
    el.vertex_ids = cyc;
    const int m = el.n_edges();
    el.edge_ids.resize(m);
    el.outward_normals.resize(m);
    for (int i = 0; i < m; ++i) {
      const int a = cyc[i];
      const int b = cyc[(i + 1) % m];
      if (a == b) throw std::invalid_argument("build_mesh: degenerate edge in element");
      const auto key = std::minmax(a, b);
      auto [it, inserted] = edge_of.try_emplace(key, mesh.n_edges());
      if (inserted) {
        Edge edge;
        edge.v0 = key.first;
        edge.v1 = key.second;
        edge.length = (mesh.vertices[b] - mesh.vertices[a]).norm();
        edge.midpoint = 0.5 * (mesh.vertices[a] + mesh.vertices[b]);
        mesh.edges.push_back(edge);
      }
      const int eid = it->second;
      el.edge_ids[i] = eid;
      Edge& edge = mesh.edges[eid];
      if (edge.incident_elements[0] < 0) {
        edge.incident_elements[0] = static_cast<int>(e);
      } else if (edge.incident_elements[1] < 0) {
        edge.incident_elements[1] = static_cast<int>(e);
      } else {
        throw std::invalid_argument("build_mesh: edge shared by more than two elements");
      }
      const Point2 d = mesh.vertices[b] - mesh.vertices[a];
      el.outward_normals[i] = Point2(d.y(), -d.x()).normalized();
    }

    const std::vector<Point2> poly = mesh.element_vertices(static_cast<int>(e));
    el.area = polygon_signed_area(poly);
    el.centroid = polygon_centroid(poly);
    el.diameter = 0.0;
    for (std::size_t i = 0; i < poly.size(); ++i) {
      for (std::size_t k = i + 1; k < poly.size(); ++k) {
        el.diameter = std::max(el.diameter, (poly[i] - poly[k]).norm());
      }
    }
  }

  mesh.h = 0.0;
  for (const Element& el : mesh.elements) mesh.h = std::max(mesh.h, el.diameter);
  for (int e = 0; e < mesh.n_edges(); ++e) {
    Edge& edge = mesh.edges[e];
    edge.is_boundary = edge.incident_elements[1] < 0;
    if (edge.is_boundary) mesh.boundary_edge_ids.push_back(e);
  }
  return mesh;
}

Mesh generate_uniform_triangular(int n) {
  if (n < 1) throw std::invalid_argument("generate_uniform_triangular: n must be >= 1");
  std::vector<Point2> verts;
  verts.reserve(static_cast<std::size_t>(n + 1) * (n + 1));
  for (int j = 0; j <= n; ++j) {
    for (int i = 0; i <= n; ++i) verts.emplace_back(double(i) / n, double(j) / n);
  }
  const auto vid = [n](int i, int j) { return j * (n + 1) + i; };
  std::vector<std::vector<int>> cells;
  cells.reserve(2u * n * n);
  for (int j = 0; j < n; ++j) {
    for (int i = 0; i < n; ++i) {
      // split along the lower-left -> upper-right diagonal
      cells.push_back({vid(i, j), vid(i + 1, j), vid(i + 1, j + 1)});
      cells.push_back({vid(i, j), vid(i + 1, j + 1), vid(i, j + 1)});
    }
  }
  return build_mesh(std::move(verts), cells);
}

Mesh generate_uniform_rectangular(int n) {
  if (n < 1) throw std::invalid_argument("generate_uniform_rectangular: n must be >= 1");
  std::vector<Point2> verts;
  verts.reserve(static_cast<std::size_t>(n + 1) * (n + 1));
  for (int j = 0; j <= n; ++j) {
    for (int i = 0; i <= n; ++i) verts.emplace_back(double(i) / n, double(j) / n);
  }
  const auto vid = [n](int i, int j) { return j * (n + 1) + i; };
  std::vector<std::vector<int>> cells;
  cells.reserve(static_cast<std::size_t>(n) * n);
  for (int j = 0; j < n; ++j) {
    for (int i = 0; i < n; ++i) {
      cells.push_back({vid(i, j), vid(i + 1, j), vid(i + 1, j + 1), vid(i, j + 1)});
    }
  }
  return build_mesh(std::move(verts), cells);
}

namespace {

// Vertex bookkeeping for the cut-corner family. A mesh vertex is either an
// uncut grid vertex (one on the domain boundary) or one of the four cut
// points attached to an interior grid vertex (dir: 0=+x, 1=+y, 2=-x, 3=-y).
struct PolyVertexTable {
  int n;
  double d;
  std::vector<int> grid_vertex;               // (n+1)^2, -1 if cut away
  std::vector<std::array<int, 4>> cut_point;  // (n+1)^2
  std::vector<Point2> coords;

  PolyVertexTable(int n_, double d_) : n(n_), d(d_) {
    grid_vertex.assign(static_cast<std::size_t>(n + 1) * (n + 1), -1);
    cut_point.assign(static_cast<std::size_t>(n + 1) * (n + 1), {-1, -1, -1, -1});
    for (int j = 0; j <= n; ++j) {
      for (int i = 0; i <= n; ++i) {
        const Point2 p(double(i) / n, double(j) / n);
        const std::size_t g = static_cast<std::size_t>(j) * (n + 1) + i;
        if (interior(i, j)) {
          static constexpr std::array<std::array<double, 2>, 4> dirs = {
              {{1.0, 0.0}, {0.0, 1.0}, {-1.0, 0.0}, {0.0, -1.0}}};
          for (int dir = 0; dir < 4; ++dir) {
            cut_point[g][dir] = static_cast<int>(coords.size());
            coords.emplace_back(p.x() + d * dirs[dir][0], p.y() + d * dirs[dir][1]);
          }
        } else {
          grid_vertex[g] = static_cast<int>(coords.size());
          coords.push_back(p);
        }
      }
    }
  }

  bool interior(int i, int j) const { return i > 0 && i < n && j > 0 && j < n; }
  int grid(int i, int j) const { return grid_vertex[static_cast<std::size_t>(j) * (n + 1) + i]; }
  int cut(int i, int j, int dir) const {
    return cut_point[static_cast<std::size_t>(j) * (n + 1) + i][dir];
  }
};

}  // namespace

Mesh generate_polygonal(int n, double cut_ratio) {
  if (n < 2) throw std::invalid_argument("generate_polygonal: n must be >= 2");
  if (!(cut_ratio > 0.0 && cut_ratio < 0.5)) {
    throw std::invalid_argument("generate_polygonal: cut_ratio must lie in (0, 1/2)");
  }
  const double d = cut_ratio / n;
  PolyVertexTable tab(n, d);

  std::vector<std::vector<int>> cells;
  // Grid cells, corners cut where the corner vertex is interior. The CCW walk
  // visits each side's two corner stations; a cut corner contributes the two
  // cut points adjacent to the cell, an uncut corner contributes itself twice
  // (deduplicated below).
  for (int j = 0; j < n; ++j) {
    for (int i = 0; i < n; ++i) {
      std::vector<int> cyc;
      const auto corner = [&](int ci, int cj, int dir_in, int dir_out) {
        if (tab.interior(ci, cj)) {
          cyc.push_back(tab.cut(ci, cj, dir_in));
          cyc.push_back(tab.cut(ci, cj, dir_out));
        } else {
          cyc.push_back(tab.grid(ci, cj));
        }
      };
      corner(i, j, 3, 0);          // lower-left: arrive from below, leave right
      corner(i + 1, j, 2, 1);      // lower-right: arrive from the left, leave up
      corner(i + 1, j + 1, 0, 2);  // upper-right
      corner(i, j + 1, 1, 3);      // upper-left
      cells.push_back(std::move(cyc));
    }
  }
  // Diamonds at interior grid vertices.
  for (int j = 1; j < n; ++j) {
    for (int i = 1; i < n; ++i) {
      cells.push_back({tab.cut(i, j, 0), tab.cut(i, j, 1), tab.cut(i, j, 2), tab.cut(i, j, 3)});
    }
  }
  return build_mesh(std::move(tab.coords), cells);
}

namespace {

std::string entity(const char* kind, int id) {
  std::ostringstream os;
  os << kind << " " << id;
  return os.str();
}

}  // namespace

std::vector<std::string> validate(const Mesh& mesh) {
  std::vector<std::string> out;
  const auto fail = [&out](const std::string& who, const std::string& what) {
    out.push_back(who + ": " + what);
  };

  for (int v = 0; v < mesh.n_vertices(); ++v) {
    if (!mesh.vertices[v].allFinite()) fail(entity("vertex", v), "coordinates not finite");
  }

  double total_area = 0.0;
  double max_diam = 0.0;
  for (int e = 0; e < mesh.n_elements(); ++e) {
    const Element& el = mesh.elements[e];
    const std::vector<Point2> poly = mesh.element_vertices(e);
    if (el.n_edges() < 3) {
      fail(entity("element", e), "fewer than 3 edges");
      continue;
    }
    const double signed_area = polygon_signed_area(poly);
    if (!(signed_area > 0.0)) fail(entity("element", e), "signed area <= 0 (not CCW)");
    if (!polygon_is_convex_ccw(poly)) fail(entity("element", e), "polygon not simple convex CCW");
    if (std::abs(signed_area - el.area) > 1e-12) fail(entity("element", e), "stored area mismatch");
    double diam = 0.0;
    for (std::size_t i = 0; i < poly.size(); ++i) {
      for (std::size_t k = i + 1; k < poly.size(); ++k) {
        diam = std::max(diam, (poly[i] - poly[k]).norm());
      }
    }
    if (std::abs(diam - el.diameter) > 1e-12) {
      fail(entity("element", e), "h_T is not the max pairwise vertex distance");
    }
    for (int i = 0; i < el.n_edges(); ++i) {
      const int eid = el.edge_ids[i];
      const Edge& edge = mesh.edges[eid];
      const Point2 to_mid = edge.midpoint - el.centroid;
      if (el.outward_normals[i].dot(to_mid) <= 0.0) {
        fail(entity("element", e), "outward normal points inward on edge " + std::to_string(eid));
      }
      if (std::abs(el.outward_normals[i].norm() - 1.0) > 1e-12) {
        fail(entity("element", e), "normal not unit length");
      }
    }
    total_area += signed_area;
    max_diam = std::max(max_diam, el.diameter);
  }

  std::vector<int> incidence_count(mesh.n_edges(), 0);
  std::vector<int> orientation_sum(mesh.n_edges(), 0);
  for (int e = 0; e < mesh.n_elements(); ++e) {
    const Element& el = mesh.elements[e];
    const int m = el.n_edges();
    for (int i = 0; i < m; ++i) {
      const int a = el.vertex_ids[i];
      const int b = el.vertex_ids[(i + 1) % m];
      const int eid = el.edge_ids[i];
      if (eid < 0 || eid >= mesh.n_edges()) {
        fail(entity("element", e), "edge id out of range");
        continue;
      }
      ++incidence_count[eid];
      const Edge& edge = mesh.edges[eid];
      if (std::minmax(a, b) != std::make_pair(edge.v0, edge.v1)) {
        fail(entity("element", e), "edge cycle does not match edge endpoints");
      }
      orientation_sum[eid] += (a == edge.v0) ? 1 : -1;
    }
  }

  for (int e = 0; e < mesh.n_edges(); ++e) {
    const Edge& edge = mesh.edges[e];
    if (edge.v0 == edge.v1) fail(entity("edge", e), "endpoints not distinct");
    if (!(edge.length > 0.0)) fail(entity("edge", e), "length <= 0");
    const int listed = (edge.incident_elements[0] >= 0) + (edge.incident_elements[1] >= 0);
    if (incidence_count[e] != listed) fail(entity("edge", e), "incidence list inconsistent");
    if (edge.is_boundary) {
      if (incidence_count[e] != 1) {
        fail(entity("edge", e), "boundary edge not incident to exactly 1 element");
      }
    } else {
      if (incidence_count[e] != 2) {
        fail(entity("edge", e), "interior edge shared by != 2 elements");
      } else if (orientation_sum[e] != 0) {
        fail(entity("edge", e), "incident elements do not induce opposite orientations");
      }
    }
  }

  if (std::abs(total_area - 1.0) > 1e-12) {
    fail("mesh", "element areas do not partition the unit square");
  }
  if (std::abs(max_diam - mesh.h) > 1e-12) fail("mesh", "h is not the max element diameter");
  return out;
}

Mesh permute_elements(const Mesh& mesh, const std::vector<int>& perm) {
  if (perm.size() != static_cast<std::size_t>(mesh.n_elements())) {
    throw std::invalid_argument("permute_elements: permutation size mismatch");
  }
  Mesh out = mesh;
  std::vector<int> new_index(mesh.n_elements(), -1);
  for (int i = 0; i < mesh.n_elements(); ++i) {
    out.elements[i] = mesh.elements[perm[i]];
    new_index[perm[i]] = i;
  }
  for (Edge& edge : out.edges) {
    for (int& inc : edge.incident_elements) {
      if (inc >= 0) inc = new_index[inc];
    }
  }
  return out;
}

}  // namespace sfwg
