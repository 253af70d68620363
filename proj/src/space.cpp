#include "sfwg/space.hpp"

#include <cmath>
#include <stdexcept>

namespace sfwg {

DofMap::DofMap(const Mesh& mesh, int k_in)
    : k(k_in),
      dim_k(poly_space_dim(k_in)),
      n_elements(mesh.n_elements()),
      n_edges(mesh.n_edges()) {
  if (k < 1) throw std::invalid_argument("DofMap: k must be >= 1");
  n_all = n_elements * dim_k + n_edges * (k + 1);
  full_to_reduced.assign(n_all, -1);
  int next = 0;
  for (int i = 0; i < n_elements * dim_k; ++i) full_to_reduced[i] = next++;
  for (int e = 0; e < n_edges; ++e) {
    if (mesh.edges[e].is_boundary) continue;
    for (int l = 0; l <= k; ++l) full_to_reduced[edge_offset(e) + l] = next++;
  }
  n_0 = next;
}

std::vector<int> DofMap::element_dofs(const Mesh& mesh, int elem) const {
  const Element& el = mesh.elements[elem];
  std::vector<int> dofs;
  dofs.reserve(dim_k + el.n_edges() * (k + 1));
  for (int i = 0; i < dim_k; ++i) dofs.push_back(element_offset(elem) + i);
  for (int eid : el.edge_ids) {
    for (int l = 0; l <= k; ++l) dofs.push_back(edge_offset(eid) + l);
  }
  return dofs;
}

namespace {

// Cholesky solve with one refinement step; keeps the residual of M X = B at
// the backward-stable level even for the larger degree-j Gram matrices.
Eigen::MatrixXd refined_solve(const Eigen::LLT<Eigen::MatrixXd>& llt, const Eigen::MatrixXd& m,
                              const Eigen::MatrixXd& b) {
  Eigen::MatrixXd x = llt.solve(b);
  x += llt.solve(b - m * x);
  return x;
}

}  // namespace

ElementOperators build_element_operators(const Mesh& mesh, int elem, int k,
                                         const SpaceOptions& options) {
  const Element& el = mesh.elements[elem];
  const int n = el.n_edges();
  const int dim_k = poly_space_dim(k);

  ElementOperators ops;
  ops.j = n + k - 1;
  const int dim_j = poly_space_dim(ops.j);
  ops.basis_k = ScaledMonomialBasis(el.centroid, el.diameter, k);
  ops.basis_j = ScaledMonomialBasis(el.centroid, el.diameter, ops.j);

  const std::vector<Point2> poly = mesh.element_vertices(elem);
  ops.quad = element_quadrature(poly, 2 * ops.j + 2);
  ops.mass_j = mass_matrix(ops.basis_j, ops.quad);
  ops.mass_j_llt.compute(ops.mass_j);
  ops.mass_k = ops.mass_j.topLeftCorner(dim_k, dim_k);
  ops.mass_k_llt.compute(ops.mass_k);
  ops.dx_j = ops.basis_j.derivative_x_matrix();
  ops.dy_j = ops.basis_j.derivative_y_matrix();
  ops.integrals_k = ops.mass_j.row(0).head(dim_k);  // phi_0 == 1

  const int n_local = dim_k + n * (k + 1);
  Eigen::MatrixXd load = Eigen::MatrixXd::Zero(2 * dim_j, n_local);
  // Interior columns: -(phi_i, div q)_T through the derivative matrices.
  const Eigen::MatrixXd mdx = ops.mass_j * ops.dx_j;
  const Eigen::MatrixXd mdy = ops.mass_j * ops.dy_j;
  load.topLeftCorner(dim_j, dim_k) = -mdx.topRows(dim_k).transpose();
  load.bottomLeftCorner(dim_j, dim_k) = -mdy.topRows(dim_k).transpose();

  ops.edge_quads.resize(n);
  ops.edge_trace_j.resize(n);
  Eigen::MatrixXd a = Eigen::MatrixXd::Zero(n_local, n_local);
  a.topLeftCorner(dim_k, dim_k) = ops.mass_k;
  const double penalty = std::pow(el.diameter, options.penalty_exponent);
  for (int i = 0; i < n; ++i) {
    const Edge& edge = mesh.edges[el.edge_ids[i]];
    const Point2& p0 = mesh.vertices[edge.v0];
    const Point2& p1 = mesh.vertices[edge.v1];
    ops.edge_quads[i] = edge_quadrature(p0, p1, k + ops.j + 2);
    const QuadratureRule& rule = ops.edge_quads[i];
    const EdgeBasis edge_basis(p0, p1, k);
    const Eigen::MatrixXd vpsi = edge_basis.evaluate(rule.points);
    const Eigen::MatrixXd vphi_j = ops.basis_j.evaluate(rule.points);
    ops.edge_trace_j[i] = vpsi.transpose() * rule.weights.asDiagonal() * vphi_j;

    const int off = dim_k + i * (k + 1);
    const Point2& nrm = el.outward_normals[i];
    load.block(0, off, dim_j, k + 1) = nrm.x() * ops.edge_trace_j[i].transpose();
    load.block(dim_j, off, dim_j, k + 1) = nrm.y() * ops.edge_trace_j[i].transpose();

    // Boundary penalty of a(.,.): h_T <w0 - w_b, v0 - v_b>_e blockwise.
    const auto vphi_k = vphi_j.leftCols(dim_k);
    const Eigen::MatrixXd wphi = rule.weights.asDiagonal() * vphi_k;
    a.topLeftCorner(dim_k, dim_k) += penalty * (vphi_k.transpose() * wphi);
    const Eigen::MatrixXd cross = vphi_k.transpose() * rule.weights.asDiagonal() * vpsi;
    a.block(0, off, dim_k, k + 1) -= penalty * cross;
    a.block(off, 0, k + 1, dim_k) -= penalty * cross.transpose();
    a.block(off, off, k + 1, k + 1) +=
        penalty * (vpsi.transpose() * rule.weights.asDiagonal() * vpsi);
  }
  ops.a_local = 0.5 * (a + a.transpose()).eval();

  ops.wg.k = k;
  ops.wg.j = ops.j;
  ops.wg.n_edges = n;
  Eigen::MatrixXd g(2 * dim_j, n_local);
  g.topRows(dim_j) = refined_solve(ops.mass_j_llt, ops.mass_j, load.topRows(dim_j));
  g.bottomRows(dim_j) = refined_solve(ops.mass_j_llt, ops.mass_j, load.bottomRows(dim_j));
  const double res = ((ops.mass_j * g.topRows(dim_j) - load.topRows(dim_j)).norm() +
                      (ops.mass_j * g.bottomRows(dim_j) - load.bottomRows(dim_j)).norm()) /
                     std::max(load.norm(), 1e-300);
  if (res > 1e-10) {
    throw std::runtime_error("build_weak_gradient: Gram solve residual " + std::to_string(res));
  }
  ops.wg.G = std::move(g);

  Eigen::MatrixXd b = ops.wg.G.topRows(dim_j).transpose() * ops.mass_j * ops.wg.G.topRows(dim_j) +
                      ops.wg.G.bottomRows(dim_j).transpose() * ops.mass_j *
                          ops.wg.G.bottomRows(dim_j);
  ops.b_local = 0.5 * (b + b.transpose()).eval();
  return ops;
}

WeakSpace::WeakSpace(const Mesh& mesh, int k, SpaceOptions options)
    : mesh_(&mesh), k_(k), options_(options), dof_(mesh, k) {
  element_ops_.reserve(mesh.n_elements());
  for (int e = 0; e < mesh.n_elements(); ++e) {
    element_ops_.push_back(build_element_operators(mesh, e, k, options_));
  }
  edge_ops_.reserve(mesh.n_edges());
  for (int e = 0; e < mesh.n_edges(); ++e) {
    const Edge& edge = mesh.edges[e];
    EdgeOperators ops;
    ops.basis = EdgeBasis(mesh.vertices[edge.v0], mesh.vertices[edge.v1], k);
    const QuadratureRule rule =
        edge_quadrature(mesh.vertices[edge.v0], mesh.vertices[edge.v1], 2 * k + 2);
    ops.mass = mass_matrix(ops.basis, rule);
    ops.mass_llt.compute(ops.mass);
    edge_ops_.push_back(std::move(ops));
  }
}

Eigen::VectorXd WeakSpace::local_coeffs(const WeakFunction& v, int elem) const {
  const std::vector<int> dofs = dof_.element_dofs(*mesh_, elem);
  Eigen::VectorXd out(dofs.size());
  for (std::size_t i = 0; i < dofs.size(); ++i) out[i] = v.coeffs[dofs[i]];
  return out;
}

WeakFunction WeakSpace::zero() const {
  return WeakFunction{k_, Eigen::VectorXd::Zero(dof_.n_all)};
}

WeakFunction WeakSpace::interpolate(const ScalarFn& f) const {
  WeakFunction out = zero();
  for (int e = 0; e < mesh_->n_elements(); ++e) {
    const ElementOperators& ops = element_ops_[e];
    out.coeffs.segment(dof_.element_offset(e), dof_.dim_k) = project_q0(f, ops.basis_k, ops.quad);
  }
  for (int e = 0; e < mesh_->n_edges(); ++e) {
    const Edge& edge = mesh_->edges[e];
    const QuadratureRule rule =
        edge_quadrature(mesh_->vertices[edge.v0], mesh_->vertices[edge.v1], 2 * k_ + 4);
    out.coeffs.segment(dof_.edge_offset(e), k_ + 1) = project_qb(f, edge_ops_[e].basis, rule);
  }
  return out;
}

Eigen::VectorXd WeakSpace::weak_gradient_coeffs(const WeakFunction& v, int elem) const {
  return element_ops_[elem].wg.G * local_coeffs(v, elem);
}

}  // namespace sfwg
