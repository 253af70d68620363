#ifndef SFWG_QUADRATURE_HPP
#define SFWG_QUADRATURE_HPP

#include <Eigen/Dense>

#include <span>

namespace sfwg {

using Point2 = Eigen::Vector2d;

/// Quadrature rule on a 2D region or on a segment. Points are stored as
/// columns; weights carry the measure of the domain (sum of weights equals
/// the area of the element resp. the length of the edge).
struct QuadratureRule {
  Eigen::Matrix2Xd points;
  Eigen::VectorXd weights;
  int exactness = 0;

  Eigen::Index size() const { return weights.size(); }

  /// Integrates a pointwise-evaluable function.
  template <typename F>
  double integrate(F&& f) const {
    double s = 0.0;
    for (Eigen::Index q = 0; q < weights.size(); ++q) {
      s += weights[q] * f(Point2(points.col(q)));
    }
    return s;
  }
};

/// Gauss-Legendre nodes and weights on [-1, 1].
void gauss_legendre(int n, Eigen::VectorXd& nodes, Eigen::VectorXd& weights);

/// Gauss-Legendre rule on the segment [a, b] exact for 1D polynomials of the
/// given degree (in the arclength parameter). Uses ceil((degree+1)/2) points.
QuadratureRule edge_quadrature(const Point2& a, const Point2& b, int degree);

/// Quadrature on a convex polygon, exact for bivariate polynomials of total
/// degree <= degree. Fan-triangulates from the area centroid and places a
/// conical-product Gauss rule on each triangle. Throws std::invalid_argument
/// on non-convex input.
QuadratureRule element_quadrature(std::span<const Point2> polygon, int degree);

/// Signed area of a polygon (positive for counterclockwise orientation).
double polygon_signed_area(std::span<const Point2> polygon);

/// Area centroid of a simple polygon.
Point2 polygon_centroid(std::span<const Point2> polygon);

/// True if the polygon is convex with strictly CCW turns at every vertex.
bool polygon_is_convex_ccw(std::span<const Point2> polygon);

}  // namespace sfwg

#endif
