#ifndef SFWG_SPACE_HPP
#define SFWG_SPACE_HPP

#include <Eigen/Cholesky>

#include "sfwg/weak_gradient.hpp"

namespace sfwg {

/// Global numbering of the weak function space V_h: all element-interior
/// coefficient blocks first, then all edge blocks. V_h^0 drops the boundary
/// edge blocks; full_to_reduced maps V_h indices to V_h^0 indices (-1 where
/// removed).
struct DofMap {
  int k = 0;
  int dim_k = 0;
  int n_elements = 0;
  int n_edges = 0;
  int n_all = 0;
  int n_0 = 0;
  std::vector<int> full_to_reduced;

  DofMap() = default;
  DofMap(const Mesh& mesh, int k);

  int element_offset(int elem) const { return elem * dim_k; }
  int edge_offset(int edge) const { return n_elements * dim_k + edge * (k + 1); }

  /// Global indices of an element's local dofs (interior, then edges in
  /// cycle order), matching the WeakGradientOperator layout.
  std::vector<int> element_dofs(const Mesh& mesh, int elem) const;
};

/// Discrete field {v0, v_b}: one coefficient vector in DofMap layout.
struct WeakFunction {
  int k = 0;
  Eigen::VectorXd coeffs;
};

/// Per-element discrete operators of the SFWG space.
struct ElementOperators {
  int j = 0;
  ScaledMonomialBasis basis_k;
  ScaledMonomialBasis basis_j;
  QuadratureRule quad;                   // exactness 2j + 2
  Eigen::MatrixXd mass_j;                // scalar P_j Gram
  Eigen::LLT<Eigen::MatrixXd> mass_j_llt;
  Eigen::MatrixXd mass_k;                // top-left block of mass_j
  Eigen::LLT<Eigen::MatrixXd> mass_k_llt;
  Eigen::MatrixXd dx_j, dy_j;            // derivative matrices on P_j coefficients
  Eigen::VectorXd integrals_k;           // int_T phi_i for the degree-k basis
  WeakGradientOperator wg;
  Eigen::MatrixXd a_local;               // local matrix of a(.,.)
  Eigen::MatrixXd b_local;               // local matrix of b(.,.) = G^T M2 G
  std::vector<QuadratureRule> edge_quads;        // exactness k + j + 2
  std::vector<Eigen::MatrixXd> edge_trace_j;     // (k+1) x dim_j cross Gram per edge
};

struct EdgeOperators {
  EdgeBasis basis;
  Eigen::MatrixXd mass;  // (k+1) x (k+1)
  Eigen::LLT<Eigen::MatrixXd> mass_llt;
};

struct SpaceOptions {
  double penalty_exponent = 1.0;  // exponent on h_T in the a(.,.) boundary term
};

/// Builds every local operator of one element (bases, quadrature, Gram
/// matrices, weak gradient, local bilinear forms).
ElementOperators build_element_operators(const Mesh& mesh, int elem, int k,
                                         const SpaceOptions& options);

/// All element-local machinery of the SFWG discretization on one mesh at one
/// polynomial degree. Immutable after construction.
class WeakSpace {
 public:
  WeakSpace(const Mesh& mesh, int k, SpaceOptions options = {});

  const Mesh& mesh() const { return *mesh_; }
  int degree() const { return k_; }
  const DofMap& dof() const { return dof_; }
  const SpaceOptions& options() const { return options_; }
  const ElementOperators& element_ops(int elem) const { return element_ops_[elem]; }
  const EdgeOperators& edge_ops(int edge) const { return edge_ops_[edge]; }

  /// Local coefficient vector of a weak function on one element.
  Eigen::VectorXd local_coeffs(const WeakFunction& v, int elem) const;

  /// Interpolant Q_h f = {Q_0 f, Q_b f}.
  WeakFunction interpolate(const ScalarFn& f) const;

  /// Zero weak function.
  WeakFunction zero() const;

  /// Coefficients of grad_w v on an element (doubled degree-j basis).
  Eigen::VectorXd weak_gradient_coeffs(const WeakFunction& v, int elem) const;

 private:
  const Mesh* mesh_;
  int k_;
  SpaceOptions options_;
  DofMap dof_;
  std::vector<ElementOperators> element_ops_;
  std::vector<EdgeOperators> edge_ops_;
};

}  // namespace sfwg

#endif
