#ifndef SFWG_BASIS_HPP
#define SFWG_BASIS_HPP

#include <Eigen/Dense>

#include "sfwg/quadrature.hpp"

namespace sfwg {

/// Dimension of the polynomial space P_d on a 2D element.
constexpr int poly_space_dim(int d) { return d >= 0 ? (d + 1) * (d + 2) / 2 : 0; }

/// Scaled monomial basis of P_d(T): phi_{(a,b)}(x) = ((x-x_T)/h_T)^a ((y-y_T)/h_T)^b,
/// ordered by total degree, x-exponent descending within a degree. The first
/// function is identically 1. Centering at the centroid and scaling by the
/// element diameter keep the mass-matrix conditioning mesh-size independent.
class ScaledMonomialBasis {
 public:
  ScaledMonomialBasis() = default;
  ScaledMonomialBasis(const Point2& center, double scale, int degree);

  int degree() const { return degree_; }
  int size() const { return poly_space_dim(degree_); }
  const Point2& center() const { return center_; }
  double scale() const { return scale_; }

  /// Exponent pair (a, b) of basis function i.
  std::pair<int, int> exponents(int i) const;
  /// Index of the basis function with exponents (a, b).
  static int index_of(int a, int b) { return poly_space_dim(a + b - 1) + b; }

  /// Values at the given points: (#points) x size() Vandermonde matrix.
  Eigen::MatrixXd evaluate(const Eigen::Matrix2Xd& points) const;
  /// x- and y-derivative values at the given points.
  void evaluate_gradient(const Eigen::Matrix2Xd& points, Eigen::MatrixXd& dx,
                         Eigen::MatrixXd& dy) const;

  /// Matrix D with (d/dx phi_j) = sum_i D(i,j) phi_i; same basis, lower degree.
  Eigen::MatrixXd derivative_x_matrix() const;
  Eigen::MatrixXd derivative_y_matrix() const;

 private:
  Point2 center_ = Point2::Zero();
  double scale_ = 1.0;
  int degree_ = 0;
};

/// Basis of P_d(e) in the arclength parameter measured from the edge
/// midpoint: psi_i(s) = ((s - s_mid)/(|e|/2))^i. The orientation is fixed
/// globally (p0 -> p1) so both incident elements see the same functions.
class EdgeBasis {
 public:
  EdgeBasis() = default;
  EdgeBasis(const Point2& p0, const Point2& p1, int degree);

  int degree() const { return degree_; }
  int size() const { return degree_ + 1; }
  double length() const { return length_; }

  /// Values at points lying on the edge: (#points) x size().
  Eigen::MatrixXd evaluate(const Eigen::Matrix2Xd& points) const;

 private:
  Point2 mid_ = Point2::Zero();
  Point2 dir_ = Point2::UnitX();  // unit vector from p0 to p1
  double length_ = 0.0;
  int degree_ = 0;
};

/// Gram matrix M_ij = sum_q w_q phi_i(x_q) phi_j(x_q); exact when the rule's
/// exactness covers twice the basis degree. Symmetric positive definite on
/// non-degenerate elements; throws std::runtime_error if a Cholesky
/// factorization of the result fails.
Eigen::MatrixXd mass_matrix(const ScaledMonomialBasis& basis, const QuadratureRule& quad);
Eigen::MatrixXd mass_matrix(const EdgeBasis& basis, const QuadratureRule& quad);

}  // namespace sfwg

#endif
