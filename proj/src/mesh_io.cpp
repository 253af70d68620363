#include "sfwg/mesh_io.hpp"

#include <charconv>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace sfwg {

namespace {

std::string fmt_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

struct LineReader {
  std::istream& is;
  int line_no = 0;

  bool next(std::string& line) {
    while (std::getline(is, line)) {
      ++line_no;
      if (!line.empty() && line.back() == '\r') line.pop_back();
      if (line.empty() || line[0] == '#') continue;
      return true;
    }
    return false;
  }

  [[noreturn]] void fail(const std::string& what) const {
    throw MeshParseError("mesh parse error at line " + std::to_string(line_no) + ": " + what);
  }
};

int expect_count(LineReader& rd, const std::string& line, const char* section) {
  std::istringstream ls(line);
  std::string tag;
  long count = -1;
  ls >> tag >> count;
  if (tag != section || count < 0) rd.fail(std::string("expected section header '") + section + " <count>'");
  return static_cast<int>(count);
}

}  // namespace

void write_mesh(const Mesh& mesh, std::ostream& os) {
  os << "# sfwg mesh\n";
  os << "VERTICES " << mesh.n_vertices() << "\n";
  for (const Point2& p : mesh.vertices) {
    os << fmt_double(p.x()) << " " << fmt_double(p.y()) << "\n";
  }
  os << "EDGES " << mesh.n_edges() << "\n";
  for (const Edge& e : mesh.edges) os << e.v0 << " " << e.v1 << "\n";
  os << "ELEMENTS " << mesh.n_elements() << "\n";
  for (const Element& el : mesh.elements) {
    os << el.n_edges();
    for (int v : el.vertex_ids) os << " " << v;
    os << "\n";
  }
}

void write_mesh(const Mesh& mesh, const std::string& path) {
  std::ofstream os(path);
  if (!os) throw std::runtime_error("write_mesh: cannot open " + path);
  write_mesh(mesh, os);
}

Mesh read_mesh(std::istream& is) {
  LineReader rd{is};
  std::string line;
  if (!rd.next(line)) rd.fail("missing header: empty file");

  const int nv = expect_count(rd, line, "VERTICES");
  std::vector<Point2> verts(nv);
  for (int i = 0; i < nv; ++i) {
    if (!rd.next(line)) rd.fail("VERTICES section: vertex count mismatch (file truncated)");
    std::istringstream ls(line);
    double x, y;
    if (!(ls >> x >> y)) rd.fail("VERTICES section: expected two coordinates");
    verts[i] = Point2(x, y);
  }

  if (!rd.next(line)) rd.fail("missing EDGES section");
  const int ne = expect_count(rd, line, "EDGES");
  std::vector<std::pair<int, int>> file_edges(ne);
  for (int i = 0; i < ne; ++i) {
    if (!rd.next(line)) rd.fail("EDGES section: edge count mismatch (file truncated)");
    std::istringstream ls(line);
    int a, b;
    if (!(ls >> a >> b)) rd.fail("EDGES section: expected two vertex ids");
    if (a < 0 || a >= nv || b < 0 || b >= nv) rd.fail("EDGES section: vertex id out of range");
    file_edges[i] = {a, b};
  }

  if (!rd.next(line)) rd.fail("missing ELEMENTS section");
  const int nel = expect_count(rd, line, "ELEMENTS");
  std::vector<std::vector<int>> cells(nel);
  for (int i = 0; i < nel; ++i) {
    if (!rd.next(line)) rd.fail("ELEMENTS section: element count mismatch (file truncated)");
    std::istringstream ls(line);
    int m;
    if (!(ls >> m) || m < 3) rd.fail("ELEMENTS section: expected vertex count >= 3");
    cells[i].resize(m);
    for (int v = 0; v < m; ++v) {
      if (!(ls >> cells[i][v])) rd.fail("ELEMENTS section: too few vertex ids");
      if (cells[i][v] < 0 || cells[i][v] >= nv) rd.fail("ELEMENTS section: vertex id out of range");
    }
  }
  if (rd.next(line)) rd.fail("trailing content after ELEMENTS section");

  Mesh mesh = build_mesh(std::move(verts), cells);
  if (mesh.n_edges() != ne) rd.fail("EDGES section: edge count does not match element topology");
  for (int i = 0; i < ne; ++i) {
    if (std::minmax(file_edges[i].first, file_edges[i].second) !=
        std::make_pair(mesh.edges[i].v0, mesh.edges[i].v1)) {
      rd.fail("EDGES section: edge " + std::to_string(i) + " does not match element topology");
    }
  }
  return mesh;
}

Mesh read_mesh(const std::string& path) {
  std::ifstream is(path);
  if (!is) throw std::runtime_error("read_mesh: cannot open " + path);
  return read_mesh(is);
}

}  // namespace sfwg
