#ifndef SFWG_CASES_HPP
#define SFWG_CASES_HPP

#include "sfwg/solver.hpp"

namespace sfwg {

/// Closed-form benchmark problem: exact solution u, auxiliary field
/// phi = -Laplacian u, load f = bi-Laplacian of u, and boundary data.
struct ManufacturedCase {
  int id = 0;
  std::string name;
  ScalarFn u;
  ScalarFn phi;
  ScalarFn f;
  VectorFn grad_u;
  bool zero_dirichlet = false;
  bool zero_neumann = false;
};

/// The three benchmark cases. Derivative fields are frozen closed forms.
const std::vector<ManufacturedCase>& case_catalog();

const ManufacturedCase& get_case(int id);

BiharmonicData problem_data(const ManufacturedCase& c);

SolutionPair solve_biharmonic(const WeakSpace& space, const ManufacturedCase& c);

/// Max relative deviation of the chained finite-difference consistency check
/// (Laplacian of u against -phi, Laplacian of phi against -f) at n_points
/// deterministic sample points with the given step.
double max_fd_deviation(const ManufacturedCase& c, int n_points = 20, double step = 1e-4,
                        unsigned seed = 7u);

}  // namespace sfwg

#endif
