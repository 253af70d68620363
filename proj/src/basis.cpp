#include "sfwg/basis.hpp"

#include <stdexcept>

namespace sfwg {

ScaledMonomialBasis::ScaledMonomialBasis(const Point2& center, double scale, int degree)
    : center_(center), scale_(scale), degree_(degree) {
  if (degree < 0) throw std::invalid_argument("ScaledMonomialBasis: degree < 0");
  if (!(scale > 0.0)) throw std::invalid_argument("ScaledMonomialBasis: scale <= 0");
}

std::pair<int, int> ScaledMonomialBasis::exponents(int i) const {
  int d = 0;
  while (poly_space_dim(d) <= i) ++d;
  const int b = i - poly_space_dim(d - 1);
  return {d - b, b};
}

Eigen::MatrixXd ScaledMonomialBasis::evaluate(const Eigen::Matrix2Xd& pts) const {
  const Eigen::Index nq = pts.cols();
  const int nb = size();
  // Powers of the scaled coordinates, built once per direction.
  Eigen::MatrixXd xp(nq, degree_ + 1), yp(nq, degree_ + 1);
  xp.col(0).setOnes();
  yp.col(0).setOnes();
  const Eigen::ArrayXd xi = (pts.row(0).transpose().array() - center_.x()) / scale_;
  const Eigen::ArrayXd eta = (pts.row(1).transpose().array() - center_.y()) / scale_;
  for (int d = 1; d <= degree_; ++d) {
    xp.col(d) = xp.col(d - 1).array() * xi;
    yp.col(d) = yp.col(d - 1).array() * eta;
  }
  Eigen::MatrixXd out(nq, nb);
  for (int i = 0; i < nb; ++i) {
    const auto [a, b] = exponents(i);
    out.col(i) = xp.col(a).array() * yp.col(b).array();
  }
  return out;
}

void ScaledMonomialBasis::evaluate_gradient(const Eigen::Matrix2Xd& pts, Eigen::MatrixXd& dx,
                                            Eigen::MatrixXd& dy) const {
  const Eigen::MatrixXd vals = evaluate(pts);
  dx.resize(vals.rows(), vals.cols());
  dy.resize(vals.rows(), vals.cols());
  dx = vals * derivative_x_matrix().transpose().eval();
  dy = vals * derivative_y_matrix().transpose().eval();
}

Eigen::MatrixXd ScaledMonomialBasis::derivative_x_matrix() const {
  const int nb = size();
  Eigen::MatrixXd d = Eigen::MatrixXd::Zero(nb, nb);
  for (int i = 0; i < nb; ++i) {
    const auto [a, b] = exponents(i);
    if (a >= 1) d(index_of(a - 1, b), i) = a / scale_;
  }
  return d;
}

Eigen::MatrixXd ScaledMonomialBasis::derivative_y_matrix() const {
  const int nb = size();
  Eigen::MatrixXd d = Eigen::MatrixXd::Zero(nb, nb);
  for (int i = 0; i < nb; ++i) {
    const auto [a, b] = exponents(i);
    if (b >= 1) d(index_of(a, b - 1), i) = b / scale_;
  }
  return d;
}

EdgeBasis::EdgeBasis(const Point2& p0, const Point2& p1, int degree)
    : mid_(0.5 * (p0 + p1)), length_((p1 - p0).norm()), degree_(degree) {
  if (degree < 0) throw std::invalid_argument("EdgeBasis: degree < 0");
  if (!(length_ > 0.0)) throw std::invalid_argument("EdgeBasis: zero-length edge");
  dir_ = (p1 - p0) / length_;
}

Eigen::MatrixXd EdgeBasis::evaluate(const Eigen::Matrix2Xd& pts) const {
  const Eigen::Index nq = pts.cols();
  Eigen::MatrixXd out(nq, degree_ + 1);
  out.col(0).setOnes();
  if (degree_ >= 1) {
    const Eigen::ArrayXd t = ((pts.row(0).transpose().array() - mid_.x()) * dir_.x() +
                              (pts.row(1).transpose().array() - mid_.y()) * dir_.y()) /
                             (0.5 * length_);
    for (int d = 1; d <= degree_; ++d) out.col(d) = out.col(d - 1).array() * t;
  }
  return out;
}

namespace {

Eigen::MatrixXd gram(const Eigen::MatrixXd& vals, const Eigen::VectorXd& w) {
  Eigen::MatrixXd m = vals.transpose() * w.asDiagonal() * vals;
  m = 0.5 * (m + m.transpose()).eval();  // exactly symmetric
  Eigen::LLT<Eigen::MatrixXd> llt(m);
  if (llt.info() != Eigen::Success) {
    throw std::runtime_error("mass_matrix: Cholesky failed (degenerate element)");
  }
  return m;
}

}  // namespace

Eigen::MatrixXd mass_matrix(const ScaledMonomialBasis& basis, const QuadratureRule& quad) {
  return gram(basis.evaluate(quad.points), quad.weights);
}

Eigen::MatrixXd mass_matrix(const EdgeBasis& basis, const QuadratureRule& quad) {
  return gram(basis.evaluate(quad.points), quad.weights);
}

}  // namespace sfwg
