#include "sfwg/projections.hpp"

#include <stdexcept>

namespace sfwg {

namespace {

Eigen::VectorXd solve_projection(const Eigen::MatrixXd& vals, const Eigen::VectorXd& w,
                                 const Eigen::VectorXd& fvals) {
  Eigen::MatrixXd m = vals.transpose() * w.asDiagonal() * vals;
  m = 0.5 * (m + m.transpose()).eval();
  const Eigen::VectorXd b = vals.transpose() * (w.array() * fvals.array()).matrix();
  Eigen::LLT<Eigen::MatrixXd> llt(m);
  if (llt.info() != Eigen::Success) {
    throw std::runtime_error("projection: Cholesky failed (degenerate element)");
  }
  Eigen::VectorXd c = llt.solve(b);
  c += llt.solve(b - m * c);  // one refinement step
  return c;
}

template <typename Basis>
Eigen::VectorXd project_scalar(const ScalarFn& f, const Basis& basis,
                               const QuadratureRule& quad) {
  Eigen::VectorXd fvals(quad.size());
  for (Eigen::Index q = 0; q < quad.size(); ++q) fvals[q] = f(Point2(quad.points.col(q)));
  return solve_projection(basis.evaluate(quad.points), quad.weights, fvals);
}

}  // namespace

Eigen::VectorXd project_q0(const ScalarFn& f, const ScaledMonomialBasis& basis,
                           const QuadratureRule& quad) {
  return project_scalar(f, basis, quad);
}

Eigen::VectorXd project_qb(const ScalarFn& f, const EdgeBasis& basis,
                           const QuadratureRule& quad) {
  return project_scalar(f, basis, quad);
}

Eigen::VectorXd project_qbold(const VectorFn& f, const ScaledMonomialBasis& basis,
                              const QuadratureRule& quad) {
  Eigen::VectorXd fx(quad.size()), fy(quad.size());
  for (Eigen::Index q = 0; q < quad.size(); ++q) {
    const Eigen::Vector2d v = f(Point2(quad.points.col(q)));
    fx[q] = v.x();
    fy[q] = v.y();
  }
  const Eigen::MatrixXd vals = basis.evaluate(quad.points);
  Eigen::VectorXd out(2 * basis.size());
  out.head(basis.size()) = solve_projection(vals, quad.weights, fx);
  out.tail(basis.size()) = solve_projection(vals, quad.weights, fy);
  return out;
}

}  // namespace sfwg
