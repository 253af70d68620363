#ifndef SFWG_SOLVER_HPP
#define SFWG_SOLVER_HPP

#include "sfwg/assembly.hpp"

namespace sfwg {

/// Data of one biharmonic problem: right-hand side and boundary data derived
/// from the exact solution.
struct BiharmonicData {
  ScalarFn f;          // volume load
  ScalarFn dirichlet;  // g_D = u on the boundary
  VectorFn grad_u;     // g_N = grad u . n on the boundary
};

struct SolverDiagnostics {
  double residual = 0.0;            // relative residual of the linear solve
  double condition_estimate = 0.0;  // 1-norm condition estimate
  bool dense_path = false;
};

/// Coupled solution: phi in V_h, u with boundary edge coefficients fixed to
/// Q_b g_D and the rest solved in the V_h^0 numbering.
struct SolutionPair {
  WeakFunction phi;
  WeakFunction u;
  SolverDiagnostics diag;
};

/// Assembled saddle system [[A, -B], [-B^T, 0]] with boundary data folded
/// into the right-hand side; exposed for inspection and dumping.
struct SaddleSystem {
  SparseMat matrix;
  Eigen::VectorXd rhs;
  Eigen::VectorXd dirichlet_coeffs;  // u_b = Q_b g_D extension
};

SaddleSystem assemble_saddle(const WeakSpace& space, const BiharmonicData& data);

/// Solves the coupled scheme. Direct factorization: dense LU below 2000
/// unknowns, sparse LU above. Throws std::runtime_error on a singular
/// system; warns on stderr above a 1e14 condition estimate.
SolutionPair solve_biharmonic(const WeakSpace& space, const BiharmonicData& data);

/// Elliptic problem solved by the projections: Dirichlet (Ritz) or Neumann.
struct EllipticProblemSpec {
  enum class Kind { Dirichlet, Neumann };
  Kind kind = Kind::Dirichlet;
  ScalarFn source;  // -Laplacian v
  VectorFn flux;    // grad v, dotted with n on the boundary (Neumann only)
};

/// SFWG solution of the Poisson problem with homogeneous Dirichlet data:
/// SPD solve of the weak-gradient Gram on V_h^0.
WeakFunction solve_ritz_projection(const WeakSpace& space, const ScalarFn& source);

/// SFWG solution of the Poisson problem with Neumann data, normalized by a
/// scalar Lagrange multiplier to the mean-zero space. Checks the
/// compatibility of source and flux first.
WeakFunction solve_neumann_projection(const WeakSpace& space, const ScalarFn& source,
                                      const VectorFn& flux);

WeakFunction solve_elliptic_projection(const WeakSpace& space, const EllipticProblemSpec& spec);

/// |int_Omega phi_0 + int_dOmega g_N|: the mean-value identity residual.
double mean_value_check(const WeakSpace& space, const SolutionPair& solution,
                        const BiharmonicData& data);

}  // namespace sfwg

#endif
