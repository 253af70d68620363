#ifndef SFWG_PROJECTIONS_HPP
#define SFWG_PROJECTIONS_HPP

#include <functional>

#include "sfwg/basis.hpp"

namespace sfwg {

using ScalarFn = std::function<double(const Point2&)>;
using VectorFn = std::function<Eigen::Vector2d(const Point2&)>;

/// L2 projection of a scalar function onto the span of the basis: solves
/// M c = b with b_i = int f phi_i evaluated by the given quadrature.
Eigen::VectorXd project_q0(const ScalarFn& f, const ScaledMonomialBasis& basis,
                           const QuadratureRule& quad);

/// Edge analogue of project_q0 for the trace space P_k(e).
Eigen::VectorXd project_qb(const ScalarFn& f, const EdgeBasis& basis,
                           const QuadratureRule& quad);

/// Componentwise L2 projection of a vector field onto [P_j(T)]^2: returns the
/// stacked coefficients [c_x; c_y] in the doubled scalar basis.
Eigen::VectorXd project_qbold(const VectorFn& f, const ScaledMonomialBasis& basis,
                              const QuadratureRule& quad);

}  // namespace sfwg

#endif
