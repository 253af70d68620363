#include "sfwg/assembly.hpp"

#include <fstream>

namespace sfwg {

namespace {

template <typename Selector>
SparseMat scatter_local(const WeakSpace& space, Selector&& local_matrix, int rows, int cols,
                        bool reduce_cols) {
  const Mesh& mesh = space.mesh();
  const DofMap& dof = space.dof();
  std::vector<Eigen::Triplet<double>> trips;
  for (int e = 0; e < mesh.n_elements(); ++e) {
    const Eigen::MatrixXd& local = local_matrix(e);
    const std::vector<int> dofs = dof.element_dofs(mesh, e);
    for (std::size_t i = 0; i < dofs.size(); ++i) {
      for (std::size_t j = 0; j < dofs.size(); ++j) {
        const int col = reduce_cols ? dof.full_to_reduced[dofs[j]] : dofs[j];
        if (col < 0) continue;
        trips.emplace_back(dofs[i], col, local(i, j));
      }
    }
  }
  SparseMat m(rows, cols);
  m.setFromTriplets(trips.begin(), trips.end());
  m.makeCompressed();
  return m;
}

}  // namespace

SparseMat assemble_a(const WeakSpace& space) {
  const int n = space.dof().n_all;
  return scatter_local(
      space, [&](int e) -> const Eigen::MatrixXd& { return space.element_ops(e).a_local; }, n, n,
      false);
}

SparseMat assemble_b_full(const WeakSpace& space) {
  const int n = space.dof().n_all;
  return scatter_local(
      space, [&](int e) -> const Eigen::MatrixXd& { return space.element_ops(e).b_local; }, n, n,
      false);
}

SparseMat assemble_b(const WeakSpace& space) {
  return scatter_local(
      space, [&](int e) -> const Eigen::MatrixXd& { return space.element_ops(e).b_local; },
      space.dof().n_all, space.dof().n_0, true);
}

Eigen::VectorXd assemble_interior_load(const WeakSpace& space, const ScalarFn& f) {
  const Mesh& mesh = space.mesh();
  const DofMap& dof = space.dof();
  Eigen::VectorXd out = Eigen::VectorXd::Zero(dof.n_all);
  for (int e = 0; e < mesh.n_elements(); ++e) {
    const ElementOperators& ops = space.element_ops(e);
    Eigen::VectorXd fvals(ops.quad.size());
    for (Eigen::Index q = 0; q < ops.quad.size(); ++q) {
      fvals[q] = f(Point2(ops.quad.points.col(q)));
    }
    const Eigen::MatrixXd vals = ops.basis_k.evaluate(ops.quad.points);
    out.segment(dof.element_offset(e), dof.dim_k) =
        vals.transpose() * (ops.quad.weights.array() * fvals.array()).matrix();
  }
  return out;
}

Eigen::VectorXd assemble_boundary_flux(const WeakSpace& space, const VectorFn& grad) {
  const Mesh& mesh = space.mesh();
  const DofMap& dof = space.dof();
  Eigen::VectorXd out = Eigen::VectorXd::Zero(dof.n_all);
  for (int eid : mesh.boundary_edge_ids) {
    const Edge& edge = mesh.edges[eid];
    const int elem = edge.incident_elements[0];
    const int local = mesh.local_edge_index(elem, eid);
    const Point2& nrm = mesh.elements[elem].outward_normals[local];
    const QuadratureRule rule =
        edge_quadrature(mesh.vertices[edge.v0], mesh.vertices[edge.v1], 2 * space.degree() + 4);
    Eigen::VectorXd gvals(rule.size());
    for (Eigen::Index q = 0; q < rule.size(); ++q) {
      gvals[q] = grad(Point2(rule.points.col(q))).dot(nrm);
    }
    const Eigen::MatrixXd vals = space.edge_ops(eid).basis.evaluate(rule.points);
    out.segment(dof.edge_offset(eid), space.degree() + 1) =
        vals.transpose() * (rule.weights.array() * gvals.array()).matrix();
  }
  return out;
}

Eigen::VectorXd dirichlet_edge_coeffs(const WeakSpace& space, const ScalarFn& g) {
  const Mesh& mesh = space.mesh();
  const DofMap& dof = space.dof();
  Eigen::VectorXd out = Eigen::VectorXd::Zero(dof.n_all);
  for (int eid : mesh.boundary_edge_ids) {
    const Edge& edge = mesh.edges[eid];
    const QuadratureRule rule =
        edge_quadrature(mesh.vertices[edge.v0], mesh.vertices[edge.v1], 2 * space.degree() + 4);
    out.segment(dof.edge_offset(eid), space.degree() + 1) =
        project_qb(g, space.edge_ops(eid).basis, rule);
  }
  return out;
}

Eigen::VectorXd interior_integral_vector(const WeakSpace& space) {
  const DofMap& dof = space.dof();
  Eigen::VectorXd out = Eigen::VectorXd::Zero(dof.n_all);
  for (int e = 0; e < space.mesh().n_elements(); ++e) {
    out.segment(dof.element_offset(e), dof.dim_k) = space.element_ops(e).integrals_k;
  }
  return out;
}

double interior_mean_integral(const WeakSpace& space, const WeakFunction& v) {
  return interior_integral_vector(space).dot(v.coeffs);
}

void write_matrix_market(const SparseMat& m, const std::string& path) {
  std::ofstream os(path);
  if (!os) throw std::runtime_error("write_matrix_market: cannot open " + path);
  os << "%%MatrixMarket matrix coordinate real general\n";
  os << m.rows() << " " << m.cols() << " " << m.nonZeros() << "\n";
  char buf[64];
  for (int k = 0; k < m.outerSize(); ++k) {
    for (SparseMat::InnerIterator it(m, k); it; ++it) {
      std::snprintf(buf, sizeof(buf), "%d %d %.17g\n", static_cast<int>(it.row()) + 1,
                    static_cast<int>(it.col()) + 1, it.value());
      os << buf;
    }
  }
}

}  // namespace sfwg
