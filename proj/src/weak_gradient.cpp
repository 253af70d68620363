#include "sfwg/weak_gradient.hpp"

#include <stdexcept>

#include "sfwg/space.hpp"

namespace sfwg {

WeakGradientOperator build_weak_gradient(const Mesh& mesh, int elem, int k) {
  if (k < 1) throw std::invalid_argument("build_weak_gradient: k must be >= 1");
  return build_element_operators(mesh, elem, k, SpaceOptions{}).wg;
}

Eigen::VectorXd apply_weak_gradient(const WeakGradientOperator& op, const Eigen::VectorXd& v) {
  if (v.size() != op.n_local()) {
    throw std::invalid_argument("apply_weak_gradient: coefficient layout mismatch");
  }
  return op.G * v;
}

double check_gradex(const ScalarFn& v, const VectorFn& grad_v, const Mesh& mesh, int elem,
                    int k) {
  const ElementOperators ops = build_element_operators(mesh, elem, k, SpaceOptions{});
  const Element& el = mesh.elements[elem];
  const int dim_j = poly_space_dim(ops.j);

  // Right side of the weak gradient definition with v itself inserted:
  // -(v, div q)_T + <v, q.n>_dT, columnwise over the doubled degree-j basis.
  Eigen::VectorXd rhs = Eigen::VectorXd::Zero(2 * dim_j);
  Eigen::VectorXd vvals(ops.quad.size());
  for (Eigen::Index q = 0; q < ops.quad.size(); ++q) {
    vvals[q] = v(Point2(ops.quad.points.col(q)));
  }
  const Eigen::MatrixXd vals_j = ops.basis_j.evaluate(ops.quad.points);
  const Eigen::VectorXd moments = vals_j.transpose() * (ops.quad.weights.array() * vvals.array()).matrix();
  rhs.head(dim_j) = -ops.dx_j.transpose() * moments;
  rhs.tail(dim_j) = -ops.dy_j.transpose() * moments;
  for (int i = 0; i < el.n_edges(); ++i) {
    const QuadratureRule& rule = ops.edge_quads[i];
    Eigen::VectorXd tvals(rule.size());
    for (Eigen::Index q = 0; q < rule.size(); ++q) tvals[q] = v(Point2(rule.points.col(q)));
    const Eigen::MatrixXd vphi_j = ops.basis_j.evaluate(rule.points);
    const Eigen::VectorXd edge_moments =
        vphi_j.transpose() * (rule.weights.array() * tvals.array()).matrix();
    rhs.head(dim_j) += el.outward_normals[i].x() * edge_moments;
    rhs.tail(dim_j) += el.outward_normals[i].y() * edge_moments;
  }

  Eigen::VectorXd wg(2 * dim_j);
  wg.head(dim_j) = ops.mass_j_llt.solve(rhs.head(dim_j));
  wg.tail(dim_j) = ops.mass_j_llt.solve(rhs.tail(dim_j));

  const Eigen::VectorXd projected = project_qbold(grad_v, ops.basis_j, ops.quad);
  return (wg - projected).cwiseAbs().maxCoeff();
}

}  // namespace sfwg
