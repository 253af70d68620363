#ifndef SFWG_WEAK_GRADIENT_HPP
#define SFWG_WEAK_GRADIENT_HPP

#include "sfwg/mesh.hpp"
#include "sfwg/projections.hpp"

namespace sfwg {

/// Discrete weak gradient on one element: the matrix G maps the stacked
/// local coefficients [v0 | v_b per edge, cycle order] of a weak function to
/// the coefficients of grad_w v in the doubled scalar basis of degree
/// j = n_edges + k - 1 (x-component coefficients first).
struct WeakGradientOperator {
  int k = 0;
  int j = 0;
  int n_edges = 0;
  Eigen::MatrixXd G;  // (2 * dim P_j) x (dim P_k + n_edges * (k+1))

  int dim_k() const { return poly_space_dim(k); }
  int dim_j() const { return poly_space_dim(j); }
  int n_local() const { return dim_k() + n_edges * (k + 1); }
  int edge_offset(int local_edge) const { return dim_k() + local_edge * (k + 1); }
};

/// Builds the weak gradient operator of an element by solving the vector
/// Gram system columnwise over the local degrees of freedom. The Gram solve
/// is Cholesky with one refinement step; the relative residual of
/// M_j G = L is checked against 1e-10.
WeakGradientOperator build_weak_gradient(const Mesh& mesh, int elem, int k);

/// Applies the operator to local coefficients; plain matrix-vector product.
Eigen::VectorXd apply_weak_gradient(const WeakGradientOperator& op, const Eigen::VectorXd& v);

/// Inserts a smooth function directly into the weak gradient definition
/// (interior values and exact traces sampled at quadrature points), compares
/// against the [P_j]^2 projection of grad v, and returns the max coefficient
/// deviation. Bounded by quadrature error only.
double check_gradex(const ScalarFn& v, const VectorFn& grad_v, const Mesh& mesh, int elem, int k);

}  // namespace sfwg

#endif
