#ifndef SFWG_ASSEMBLY_HPP
#define SFWG_ASSEMBLY_HPP

#include <Eigen/Sparse>

#include "sfwg/space.hpp"

namespace sfwg {

using SparseMat = Eigen::SparseMatrix<double>;

/// Global matrix of a(w,v) on V_h x V_h. Symmetric positive definite.
SparseMat assemble_a(const WeakSpace& space);

/// Global matrix of b(v,psi) on V_h x V_h (square Gram of the weak
/// gradients). Symmetric positive semidefinite; kernel = global constants.
SparseMat assemble_b_full(const WeakSpace& space);

/// Rectangular restriction of b to V_h x V_h^0.
SparseMat assemble_b(const WeakSpace& space);

/// Load vector with entries (f, psi_0)_T on the interior dofs of V_h (edge
/// entries zero).
Eigen::VectorXd assemble_interior_load(const WeakSpace& space, const ScalarFn& f);

/// Vector with entries <grad.n, psi_b>_e over the boundary edges of V_h
/// (all other entries zero).
Eigen::VectorXd assemble_boundary_flux(const WeakSpace& space, const VectorFn& grad);

/// Coefficients of V_h whose boundary edge blocks are Q_b g and which vanish
/// elsewhere; the strong imposition of Dirichlet data.
Eigen::VectorXd dirichlet_edge_coeffs(const WeakSpace& space, const ScalarFn& g);

/// Vector c with c_i = int_T phi_i on interior dofs (zero on edge dofs),
/// so that c . coeffs = int_Omega v_0.
Eigen::VectorXd interior_integral_vector(const WeakSpace& space);

/// int_Omega v_0 of a weak function.
double interior_mean_integral(const WeakSpace& space, const WeakFunction& v);

/// Writes a sparse matrix in MatrixMarket coordinate format.
void write_matrix_market(const SparseMat& m, const std::string& path);

}  // namespace sfwg

#endif
