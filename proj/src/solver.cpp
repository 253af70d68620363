#include "sfwg/solver.hpp"

#include <Eigen/SparseLU>

#include <cmath>
#include <functional>
#include <iostream>
#include <stdexcept>

namespace sfwg {

namespace {

double one_norm(const SparseMat& m) {
  double best = 0.0;
  for (int k = 0; k < m.outerSize(); ++k) {
    double col = 0.0;
    for (SparseMat::InnerIterator it(m, k); it; ++it) col += std::abs(it.value());
    best = std::max(best, col);
  }
  return best;
}

// Hager's 1-norm estimator for ||K^-1||; K symmetric so K^T solves reuse the
// same factorization.
double inverse_one_norm_estimate(int n, const std::function<Eigen::VectorXd(const Eigen::VectorXd&)>& solve) {
  Eigen::VectorXd x = Eigen::VectorXd::Constant(n, 1.0 / n);
  double est = 0.0;
  for (int iter = 0; iter < 5; ++iter) {
    const Eigen::VectorXd y = solve(x);
    est = std::max(est, y.lpNorm<1>());
    const Eigen::VectorXd xi = y.array().sign().matrix();
    const Eigen::VectorXd z = solve(xi);
    Eigen::Index arg = 0;
    const double zmax = z.cwiseAbs().maxCoeff(&arg);
    if (zmax <= z.dot(x)) break;
    x.setZero();
    x[arg] = 1.0;
  }
  return est;
}

struct LinearSolve {
  Eigen::VectorXd x;
  SolverDiagnostics diag;
};

LinearSolve solve_linear(const SparseMat& k_mat, const Eigen::VectorXd& rhs) {
  LinearSolve out;
  const int n = static_cast<int>(k_mat.rows());
  std::function<Eigen::VectorXd(const Eigen::VectorXd&)> solve;

  Eigen::PartialPivLU<Eigen::MatrixXd> dense_lu;
  Eigen::SparseLU<SparseMat> sparse_lu;
  if (n <= 2000) {
    out.diag.dense_path = true;
    dense_lu.compute(Eigen::MatrixXd(k_mat));
    solve = [&dense_lu](const Eigen::VectorXd& b) { return dense_lu.solve(b).eval(); };
  } else {
    sparse_lu.compute(k_mat);
    if (sparse_lu.info() != Eigen::Success) {
      throw std::runtime_error("solve_linear: singular system (factorization failed)");
    }
    solve = [&sparse_lu](const Eigen::VectorXd& b) { return sparse_lu.solve(b).eval(); };
  }

  out.x = solve(rhs);
  out.x += solve(rhs - k_mat * out.x);  // one refinement step
  const double scale = std::max(rhs.norm(), 1e-300);
  out.diag.residual = (k_mat * out.x - rhs).norm() / scale;
  if (!out.x.allFinite()) throw std::runtime_error("solve_linear: singular system");

  out.diag.condition_estimate = one_norm(k_mat) * inverse_one_norm_estimate(n, solve);
  if (out.diag.condition_estimate > 1e14) {
    std::cerr << "[sfwg] warning: linear system condition estimate "
              << out.diag.condition_estimate << " exceeds 1e14\n";
  }
  return out;
}

}  // namespace

SaddleSystem assemble_saddle(const WeakSpace& space, const BiharmonicData& data) {
  const Mesh& mesh = space.mesh();
  const DofMap& dof = space.dof();
  const int n_all = dof.n_all;
  const int n_total = n_all + dof.n_0;

  SaddleSystem sys;
  sys.dirichlet_coeffs = dirichlet_edge_coeffs(space, data.dirichlet);

  std::vector<Eigen::Triplet<double>> trips;
  sys.rhs = Eigen::VectorXd::Zero(n_total);
  for (int e = 0; e < mesh.n_elements(); ++e) {
    const Eigen::MatrixXd& a = space.element_ops(e).a_local;
    const Eigen::MatrixXd& b = space.element_ops(e).b_local;
    const std::vector<int> dofs = dof.element_dofs(mesh, e);
    Eigen::VectorXd ug_local(dofs.size());
    for (std::size_t i = 0; i < dofs.size(); ++i) ug_local[i] = sys.dirichlet_coeffs[dofs[i]];
    const Eigen::VectorXd moved = b * ug_local;
    for (std::size_t i = 0; i < dofs.size(); ++i) {
      sys.rhs[dofs[i]] += moved[i];
      for (std::size_t jl = 0; jl < dofs.size(); ++jl) {
        trips.emplace_back(dofs[i], dofs[jl], a(i, jl));
        const int col = dof.full_to_reduced[dofs[jl]];
        if (col >= 0) {
          trips.emplace_back(dofs[i], n_all + col, -b(i, jl));
          trips.emplace_back(n_all + col, dofs[i], -b(i, jl));
        }
      }
    }
  }
  sys.matrix.resize(n_total, n_total);
  sys.matrix.setFromTriplets(trips.begin(), trips.end());
  sys.matrix.makeCompressed();

  sys.rhs.head(n_all) -= assemble_boundary_flux(space, data.grad_u);
  const Eigen::VectorXd f_load = assemble_interior_load(space, data.f);
  for (int i = 0; i < n_all; ++i) {
    const int red = dof.full_to_reduced[i];
    if (red >= 0) sys.rhs[n_all + red] -= f_load[i];
  }
  return sys;
}

SolutionPair solve_biharmonic(const WeakSpace& space, const BiharmonicData& data) {
  const DofMap& dof = space.dof();
  const SaddleSystem sys = assemble_saddle(space, data);
  LinearSolve ls = solve_linear(sys.matrix, sys.rhs);

  SolutionPair out;
  out.diag = ls.diag;
  out.phi = WeakFunction{space.degree(), ls.x.head(dof.n_all)};
  out.u = WeakFunction{space.degree(), sys.dirichlet_coeffs};
  for (int i = 0; i < dof.n_all; ++i) {
    const int red = dof.full_to_reduced[i];
    if (red >= 0) out.u.coeffs[i] = ls.x[dof.n_all + red];
  }
  return out;
}

WeakFunction solve_ritz_projection(const WeakSpace& space, const ScalarFn& source) {
  const DofMap& dof = space.dof();
  const Mesh& mesh = space.mesh();

  std::vector<Eigen::Triplet<double>> trips;
  for (int e = 0; e < mesh.n_elements(); ++e) {
    const Eigen::MatrixXd& b = space.element_ops(e).b_local;
    const std::vector<int> dofs = dof.element_dofs(mesh, e);
    for (std::size_t i = 0; i < dofs.size(); ++i) {
      const int ri = dof.full_to_reduced[dofs[i]];
      if (ri < 0) continue;
      for (std::size_t jl = 0; jl < dofs.size(); ++jl) {
        const int rj = dof.full_to_reduced[dofs[jl]];
        if (rj >= 0) trips.emplace_back(ri, rj, b(i, jl));
      }
    }
  }
  SparseMat b0(dof.n_0, dof.n_0);
  b0.setFromTriplets(trips.begin(), trips.end());
  b0.makeCompressed();

  const Eigen::VectorXd load = assemble_interior_load(space, source);
  Eigen::VectorXd rhs = Eigen::VectorXd::Zero(dof.n_0);
  for (int i = 0; i < dof.n_all; ++i) {
    const int red = dof.full_to_reduced[i];
    if (red >= 0) rhs[red] = load[i];
  }

  Eigen::SimplicialLDLT<SparseMat> ldlt(b0);
  if (ldlt.info() != Eigen::Success) {
    throw std::runtime_error("solve_ritz_projection: factorization failed (dof map bug)");
  }
  Eigen::VectorXd x = ldlt.solve(rhs);
  x += ldlt.solve(rhs - b0 * x);
  const double res = (b0 * x - rhs).norm() / std::max(rhs.norm(), 1e-300);
  if (res > 1e-10) {
    throw std::runtime_error("solve_ritz_projection: residual " + std::to_string(res));
  }

  WeakFunction out = space.zero();
  for (int i = 0; i < dof.n_all; ++i) {
    const int red = dof.full_to_reduced[i];
    if (red >= 0) out.coeffs[i] = x[red];
  }
  return out;
}

WeakFunction solve_neumann_projection(const WeakSpace& space, const ScalarFn& source,
                                      const VectorFn& flux) {
  const DofMap& dof = space.dof();
  const int n_all = dof.n_all;

  const Eigen::VectorXd load = assemble_interior_load(space, source);
  const Eigen::VectorXd flux_load = assemble_boundary_flux(space, flux);
  const Eigen::VectorXd constraint = interior_integral_vector(space);

  // Compatibility: int source + int_dOmega flux.n = 0 (divergence theorem),
  // evaluated as the right-hand side tested with the constant weak function.
  {
    WeakFunction ones = space.zero();
    for (int e = 0; e < space.mesh().n_elements(); ++e) {
      ones.coeffs[dof.element_offset(e)] = 1.0;
    }
    for (int eid = 0; eid < space.mesh().n_edges(); ++eid) {
      ones.coeffs[dof.edge_offset(eid)] = 1.0;
    }
    const double total = (load + flux_load).dot(ones.coeffs);
    const double scale = 1.0 + load.lpNorm<1>() + flux_load.lpNorm<1>();
    if (std::abs(total) > 1e-8 * scale) {
      throw std::invalid_argument("solve_neumann_projection: incompatible data, residual " +
                                  std::to_string(total));
    }
  }

  std::vector<Eigen::Triplet<double>> trips;
  const Mesh& mesh = space.mesh();
  for (int e = 0; e < mesh.n_elements(); ++e) {
    const Eigen::MatrixXd& b = space.element_ops(e).b_local;
    const std::vector<int> dofs = dof.element_dofs(mesh, e);
    for (std::size_t i = 0; i < dofs.size(); ++i) {
      for (std::size_t jl = 0; jl < dofs.size(); ++jl) {
        trips.emplace_back(dofs[i], dofs[jl], b(i, jl));
      }
    }
  }
  for (int i = 0; i < n_all; ++i) {
    if (constraint[i] != 0.0) {
      trips.emplace_back(i, n_all, constraint[i]);
      trips.emplace_back(n_all, i, constraint[i]);
    }
  }
  SparseMat k_mat(n_all + 1, n_all + 1);
  k_mat.setFromTriplets(trips.begin(), trips.end());
  k_mat.makeCompressed();

  Eigen::VectorXd rhs(n_all + 1);
  rhs.head(n_all) = load + flux_load;
  rhs[n_all] = 0.0;

  LinearSolve ls = solve_linear(k_mat, rhs);
  if (ls.diag.residual > 1e-10) {
    throw std::runtime_error("solve_neumann_projection: residual " +
                             std::to_string(ls.diag.residual));
  }
  return WeakFunction{space.degree(), ls.x.head(n_all)};
}

WeakFunction solve_elliptic_projection(const WeakSpace& space, const EllipticProblemSpec& spec) {
  if (spec.kind == EllipticProblemSpec::Kind::Dirichlet) {
    return solve_ritz_projection(space, spec.source);
  }
  return solve_neumann_projection(space, spec.source, spec.flux);
}

double mean_value_check(const WeakSpace& space, const SolutionPair& solution,
                        const BiharmonicData& data) {
  const Mesh& mesh = space.mesh();
  double flux_total = 0.0;
  for (int eid : mesh.boundary_edge_ids) {
    const Edge& edge = mesh.edges[eid];
    const int elem = edge.incident_elements[0];
    const Point2& nrm = mesh.elements[elem].outward_normals[mesh.local_edge_index(elem, eid)];
    const QuadratureRule rule =
        edge_quadrature(mesh.vertices[edge.v0], mesh.vertices[edge.v1], 2 * space.degree() + 6);
    flux_total += rule.integrate([&](const Point2& p) { return data.grad_u(p).dot(nrm); });
  }
  return std::abs(interior_mean_integral(space, solution.phi) + flux_total);
}

}  // namespace sfwg
