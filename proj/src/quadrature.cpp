#include "sfwg/quadrature.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

namespace sfwg {

void gauss_legendre(int n, Eigen::VectorXd& nodes, Eigen::VectorXd& weights) {
  if (n < 1) throw std::invalid_argument("gauss_legendre: n must be >= 1");
  nodes.resize(n);
  weights.resize(n);
  // Newton iteration on P_n, symmetric pairs resolved from the cosine guess.
  for (int i = 0; i < (n + 1) / 2; ++i) {
    double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
    double dp = 0.0;
    for (int it = 0; it < 100; ++it) {
      // Legendre recurrence up to degree n at x.
      double p0 = 1.0, p1 = x;
      for (int d = 2; d <= n; ++d) {
        const double p2 = ((2 * d - 1) * x * p1 - (d - 1) * p0) / d;
        p0 = p1;
        p1 = p2;
      }
      dp = n * (x * p1 - p0) / (x * x - 1.0);
      const double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-15) break;
    }
    const double w = 2.0 / ((1.0 - x * x) * dp * dp);
    nodes[i] = -x;
    nodes[n - 1 - i] = x;
    weights[i] = w;
    weights[n - 1 - i] = w;
  }
  if (n % 2 == 1) nodes[n / 2] = 0.0;
}

QuadratureRule edge_quadrature(const Point2& a, const Point2& b, int degree) {
  if (degree < 0) throw std::invalid_argument("edge_quadrature: degree < 0");
  const int n = (degree + 2) / 2;  // 2n-1 >= degree
  Eigen::VectorXd t, w;
  gauss_legendre(n, t, w);
  QuadratureRule rule;
  rule.exactness = 2 * n - 1;
  rule.points.resize(2, n);
  rule.weights.resize(n);
  const Point2 mid = 0.5 * (a + b);
  const Point2 half = 0.5 * (b - a);
  const double len = (b - a).norm();
  for (int q = 0; q < n; ++q) {
    rule.points.col(q) = mid + t[q] * half;
    rule.weights[q] = 0.5 * len * w[q];
  }
  return rule;
}

double polygon_signed_area(std::span<const Point2> poly) {
  const std::size_t m = poly.size();
  double s = 0.0;
  for (std::size_t i = 0; i < m; ++i) {
    const Point2& p = poly[i];
    const Point2& q = poly[(i + 1) % m];
    s += p.x() * q.y() - q.x() * p.y();
  }
  return 0.5 * s;
}

Point2 polygon_centroid(std::span<const Point2> poly) {
  const std::size_t m = poly.size();
  const double area = polygon_signed_area(poly);
  Point2 c = Point2::Zero();
  for (std::size_t i = 0; i < m; ++i) {
    const Point2& p = poly[i];
    const Point2& q = poly[(i + 1) % m];
    const double cross = p.x() * q.y() - q.x() * p.y();
    c += cross * (p + q);
  }
  return c / (6.0 * area);
}

bool polygon_is_convex_ccw(std::span<const Point2> poly) {
  const std::size_t m = poly.size();
  if (m < 3) return false;
  double scale = 0.0;
  for (std::size_t i = 0; i < m; ++i) scale = std::max(scale, poly[i].norm());
  for (std::size_t i = 0; i < m; ++i) {
    const Point2 d1 = poly[(i + 1) % m] - poly[i];
    const Point2 d2 = poly[(i + 2) % m] - poly[(i + 1) % m];
    const double cross = d1.x() * d2.y() - d1.y() * d2.x();
    if (cross <= 1e-14 * scale * scale) return false;
  }
  return true;
}

QuadratureRule element_quadrature(std::span<const Point2> poly, int degree) {
  if (degree < 0) throw std::invalid_argument("element_quadrature: degree < 0");
  if (!polygon_is_convex_ccw(poly)) {
    throw std::invalid_argument("element_quadrature: polygon must be convex and CCW");
  }
  // Conical-product points on the reference triangle {x,y>=0, x+y<=1}:
  // x = u, y = v(1-u) with Jacobian (1-u). The integrand times Jacobian has
  // degree (degree+1) in u and degree in v.
  const int nu = (degree + 3) / 2;
  const int nv = (degree + 2) / 2;
  Eigen::VectorXd xu, wu, xv, wv;
  gauss_legendre(nu, xu, wu);
  gauss_legendre(nv, xv, wv);
  xu = (xu.array() + 1.0) / 2.0;  // map to [0,1]
  wu /= 2.0;
  xv = (xv.array() + 1.0) / 2.0;
  wv /= 2.0;

  const std::size_t m = poly.size();
  const Point2 c = polygon_centroid(poly);
  QuadratureRule rule;
  rule.exactness = degree;
  const int per_tri = nu * nv;
  rule.points.resize(2, static_cast<Eigen::Index>(m) * per_tri);
  rule.weights.resize(static_cast<Eigen::Index>(m) * per_tri);
  Eigen::Index out = 0;
  for (std::size_t i = 0; i < m; ++i) {
    const Point2& p = poly[i];
    const Point2& q = poly[(i + 1) % m];
    const double two_area = (p.x() - c.x()) * (q.y() - c.y()) - (q.x() - c.x()) * (p.y() - c.y());
    for (int a = 0; a < nu; ++a) {
      for (int b = 0; b < nv; ++b) {
        const double xr = xu[a];
        const double yr = xv[b] * (1.0 - xu[a]);
        rule.points.col(out) = c + xr * (p - c) + yr * (q - c);
        rule.weights[out] = wu[a] * wv[b] * (1.0 - xu[a]) * two_area;
        ++out;
      }
    }
  }
  return rule;
}

}  // namespace sfwg
