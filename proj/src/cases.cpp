#include "sfwg/cases.hpp"

#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>

namespace sfwg {

namespace {

constexpr double kPi = std::numbers::pi;

// Factors of case 1: u = X(x) Y(y) with X(t) = t^2 (1-t)^2.
double quartic(double t) { return t * t * (1.0 - t) * (1.0 - t); }
double quartic_d1(double t) { return 2.0 * t - 6.0 * t * t + 4.0 * t * t * t; }
double quartic_d2(double t) { return 2.0 - 12.0 * t + 12.0 * t * t; }

std::vector<ManufacturedCase> make_catalog() {
  std::vector<ManufacturedCase> cases;

  ManufacturedCase c1;
  c1.id = 1;
  c1.name = "clamped quartic bump";
  c1.u = [](const Point2& p) { return quartic(p.x()) * quartic(p.y()); };
  c1.phi = [](const Point2& p) {
    return -(quartic_d2(p.x()) * quartic(p.y()) + quartic(p.x()) * quartic_d2(p.y()));
  };
  c1.f = [](const Point2& p) {
    return 24.0 * quartic(p.y()) + 2.0 * quartic_d2(p.x()) * quartic_d2(p.y()) +
           24.0 * quartic(p.x());
  };
  c1.grad_u = [](const Point2& p) {
    return Eigen::Vector2d(quartic_d1(p.x()) * quartic(p.y()),
                           quartic(p.x()) * quartic_d1(p.y()));
  };
  c1.zero_dirichlet = true;
  c1.zero_neumann = true;
  cases.push_back(std::move(c1));

  ManufacturedCase c2;
  c2.id = 2;
  c2.name = "sine product";
  c2.u = [](const Point2& p) { return std::sin(kPi * p.x()) * std::sin(kPi * p.y()); };
  c2.phi = [](const Point2& p) {
    return 2.0 * kPi * kPi * std::sin(kPi * p.x()) * std::sin(kPi * p.y());
  };
  c2.f = [](const Point2& p) {
    return 4.0 * kPi * kPi * kPi * kPi * std::sin(kPi * p.x()) * std::sin(kPi * p.y());
  };
  c2.grad_u = [](const Point2& p) {
    return Eigen::Vector2d(kPi * std::cos(kPi * p.x()) * std::sin(kPi * p.y()),
                           kPi * std::sin(kPi * p.x()) * std::cos(kPi * p.y()));
  };
  c2.zero_dirichlet = true;
  c2.zero_neumann = false;
  cases.push_back(std::move(c2));

  ManufacturedCase c3;
  c3.id = 3;
  c3.name = "exponential";
  c3.u = [](const Point2& p) { return std::exp(p.x() + p.y()); };
  c3.phi = [](const Point2& p) { return -2.0 * std::exp(p.x() + p.y()); };
  c3.f = [](const Point2& p) { return 4.0 * std::exp(p.x() + p.y()); };
  c3.grad_u = [](const Point2& p) {
    const double e = std::exp(p.x() + p.y());
    return Eigen::Vector2d(e, e);
  };
  c3.zero_dirichlet = false;
  c3.zero_neumann = false;
  cases.push_back(std::move(c3));

  return cases;
}

}  // namespace

const std::vector<ManufacturedCase>& case_catalog() {
  static const std::vector<ManufacturedCase> catalog = make_catalog();
  return catalog;
}

const ManufacturedCase& get_case(int id) {
  for (const ManufacturedCase& c : case_catalog()) {
    if (c.id == id) return c;
  }
  throw std::invalid_argument("get_case: unknown case id " + std::to_string(id));
}

BiharmonicData problem_data(const ManufacturedCase& c) {
  return BiharmonicData{c.f, c.u, c.grad_u};
}

SolutionPair solve_biharmonic(const WeakSpace& space, const ManufacturedCase& c) {
  return solve_biharmonic(space, problem_data(c));
}

double max_fd_deviation(const ManufacturedCase& c, int n_points, double step, unsigned seed) {
  std::mt19937 rng(seed);
  std::uniform_real_distribution<double> coord(0.05, 0.95);
  const auto fd_laplacian = [step](const ScalarFn& g, const Point2& p) {
    const double h = step;
    return (g(Point2(p.x() + h, p.y())) + g(Point2(p.x() - h, p.y())) +
            g(Point2(p.x(), p.y() + h)) + g(Point2(p.x(), p.y() - h)) - 4.0 * g(p)) /
           (h * h);
  };
  double worst = 0.0;
  for (int i = 0; i < n_points; ++i) {
    const Point2 p(coord(rng), coord(rng));
    const double phi_fd = -fd_laplacian(c.u, p);
    const double f_fd = -fd_laplacian(c.phi, p);
    const double phi_scale = std::max(std::abs(c.phi(p)), 1e-3);
    const double f_scale = std::max(std::abs(c.f(p)), 1e-3);
    worst = std::max(worst, std::abs(phi_fd - c.phi(p)) / phi_scale);
    worst = std::max(worst, std::abs(f_fd - c.f(p)) / f_scale);
  }
  return worst;
}

}  // namespace sfwg
