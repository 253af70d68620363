#include "sfwg/norms.hpp"

#include <cmath>
#include <stdexcept>

namespace sfwg {

namespace {

// Sum over element edges of weight * int_e (v0 - v_b)^2, evaluated pointwise
// at the stored edge rules (independent code path from the a_local blocks).
double boundary_mismatch_sq(const WeakSpace& space, const WeakFunction& v, int elem,
                            double weight) {
  const Mesh& mesh = space.mesh();
  const DofMap& dof = space.dof();
  const Element& el = mesh.elements[elem];
  const ElementOperators& ops = space.element_ops(elem);
  const Eigen::VectorXd v0 = v.coeffs.segment(dof.element_offset(elem), dof.dim_k);
  double total = 0.0;
  for (int i = 0; i < el.n_edges(); ++i) {
    const int eid = el.edge_ids[i];
    const QuadratureRule& rule = ops.edge_quads[i];
    const Eigen::VectorXd vb = v.coeffs.segment(dof.edge_offset(eid), space.degree() + 1);
    const Eigen::VectorXd trace = ops.basis_k.evaluate(rule.points) * v0;
    const Eigen::VectorXd edge_vals = space.edge_ops(eid).basis.evaluate(rule.points) * vb;
    total += weight * (rule.weights.array() * (trace - edge_vals).array().square()).sum();
  }
  return total;
}

}  // namespace

double norm_0h(const WeakSpace& space, const WeakFunction& v) {
  const DofMap& dof = space.dof();
  double total = 0.0;
  for (int e = 0; e < space.mesh().n_elements(); ++e) {
    const ElementOperators& ops = space.element_ops(e);
    const Eigen::VectorXd v0 = v.coeffs.segment(dof.element_offset(e), dof.dim_k);
    total += v0.dot(ops.mass_k * v0);
    const double h_t = space.mesh().elements[e].diameter;
    total += boundary_mismatch_sq(space, v, e, std::pow(h_t, space.options().penalty_exponent));
  }
  return std::sqrt(total);
}

double triple_norm(const WeakSpace& space, const WeakFunction& v) {
  double total = 0.0;
  for (int e = 0; e < space.mesh().n_elements(); ++e) {
    const Eigen::VectorXd local = space.local_coeffs(v, e);
    total += local.dot(space.element_ops(e).b_local * local);
  }
  return std::sqrt(std::max(total, 0.0));
}

double norm_1h(const WeakSpace& space, const WeakFunction& v) {
  const DofMap& dof = space.dof();
  double total = 0.0;
  for (int e = 0; e < space.mesh().n_elements(); ++e) {
    const ElementOperators& ops = space.element_ops(e);
    const Eigen::VectorXd v0 = v.coeffs.segment(dof.element_offset(e), dof.dim_k);
    const Eigen::MatrixXd dx = ops.basis_k.derivative_x_matrix();
    const Eigen::MatrixXd dy = ops.basis_k.derivative_y_matrix();
    const Eigen::VectorXd gx = dx * v0;
    const Eigen::VectorXd gy = dy * v0;
    total += gx.dot(ops.mass_k * gx) + gy.dot(ops.mass_k * gy);
    total += boundary_mismatch_sq(space, v, e, 1.0 / space.mesh().elements[e].diameter);
  }
  return std::sqrt(total);
}

namespace {

struct Norm1Parts {
  WeakFunction vstar;
  double norm1_sq = 0.0;
};

Norm1Parts build_norm1(const WeakSpace& space, const WeakFunction& psi) {
  const Mesh& mesh = space.mesh();
  const DofMap& dof = space.dof();
  const int k = space.degree();
  const double h_inv = 1.0 / mesh.h;

  Norm1Parts parts;
  parts.vstar = space.zero();

  // Element part: Q_0 of the divergence of the weak gradient.
  std::vector<Eigen::VectorXd> wg_coeffs(mesh.n_elements());
  for (int e = 0; e < mesh.n_elements(); ++e) {
    const ElementOperators& ops = space.element_ops(e);
    const int dim_j = poly_space_dim(ops.j);
    wg_coeffs[e] = space.weak_gradient_coeffs(psi, e);
    const Eigen::VectorXd div =
        ops.dx_j * wg_coeffs[e].head(dim_j) + ops.dy_j * wg_coeffs[e].tail(dim_j);
    const Eigen::VectorXd rhs = ops.mass_j.topRows(dof.dim_k) * div;
    Eigen::VectorXd q0 = ops.mass_k_llt.solve(rhs);
    q0 += ops.mass_k_llt.solve(rhs - ops.mass_k * q0);
    parts.norm1_sq += q0.dot(ops.mass_k * q0);
    parts.vstar.coeffs.segment(dof.element_offset(e), dof.dim_k) = -q0;
  }

  // Edge part: Q_b of the normal jump of the weak gradient.
  for (int eid = 0; eid < mesh.n_edges(); ++eid) {
    const Edge& edge = mesh.edges[eid];
    int max_j = 0;
    for (int inc : edge.incident_elements) {
      if (inc >= 0) max_j = std::max(max_j, space.element_ops(inc).j);
    }
    const QuadratureRule rule =
        edge_quadrature(mesh.vertices[edge.v0], mesh.vertices[edge.v1], k + max_j + 2);
    Eigen::VectorXd jump = Eigen::VectorXd::Zero(rule.size());
    for (int inc : edge.incident_elements) {
      if (inc < 0) continue;
      const ElementOperators& ops = space.element_ops(inc);
      const int dim_j = poly_space_dim(ops.j);
      const Eigen::MatrixXd vals = ops.basis_j.evaluate(rule.points);
      const Point2& nrm =
          mesh.elements[inc].outward_normals[mesh.local_edge_index(inc, eid)];
      jump += nrm.x() * (vals * wg_coeffs[inc].head(dim_j)) +
              nrm.y() * (vals * wg_coeffs[inc].tail(dim_j));
    }
    const EdgeOperators& eops = space.edge_ops(eid);
    const Eigen::VectorXd load =
        eops.basis.evaluate(rule.points).transpose() * (rule.weights.array() * jump.array()).matrix();
    Eigen::VectorXd qb = eops.mass_llt.solve(load);
    qb += eops.mass_llt.solve(load - eops.mass * qb);
    parts.norm1_sq += h_inv * qb.dot(eops.mass * qb);
    parts.vstar.coeffs.segment(dof.edge_offset(eid), k + 1) = h_inv * qb;
  }
  return parts;
}

}  // namespace

double triple_norm_1(const WeakSpace& space, const WeakFunction& psi) {
  return std::sqrt(build_norm1(space, psi).norm1_sq);
}

WeakFunction vstar(const WeakSpace& space, const WeakFunction& psi) {
  return build_norm1(space, psi).vstar;
}

double error_vs_projection(const WeakSpace& space, const ScalarFn& exact, const WeakFunction& vh,
                           ErrorNorm which) {
  const WeakFunction qh = space.interpolate(exact);
  if (which == ErrorNorm::Energy) {
    WeakFunction diff{vh.k, qh.coeffs - vh.coeffs};
    return triple_norm(space, diff);
  }
  const DofMap& dof = space.dof();
  double total = 0.0;
  for (int e = 0; e < space.mesh().n_elements(); ++e) {
    const Eigen::VectorXd d = qh.coeffs.segment(dof.element_offset(e), dof.dim_k) -
                              vh.coeffs.segment(dof.element_offset(e), dof.dim_k);
    total += d.dot(space.element_ops(e).mass_k * d);
  }
  return std::sqrt(total);
}

double observed_rate(double e_coarse, double e_fine) {
  if (!(e_coarse > 0.0) || !(e_fine > 0.0)) {
    throw std::invalid_argument("observed_rate: errors must be positive");
  }
  return std::log2(e_coarse / e_fine);
}

}  // namespace sfwg
