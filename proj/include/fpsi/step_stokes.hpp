#pragma once

#include "fpsi/boundary.hpp"
#include "fpsi/sparse.hpp"

#include <memory>

namespace fpsi {

/// Unknown layout [u_x | u_y | pi] with Taylor-Hood P2 velocity, P1 pressure.
struct StokesLayout {
  int n_u = 0, n_pi = 0;

  int u(int comp, int node) const { return comp * n_u + node; }
  int pi(int dof) const { return 2 * n_u + dof; }
  int size() const { return 2 * n_u + n_pi; }
};

struct StokesResult {
  Eigen::Matrix2Xd u;
  Eigen::VectorXd pi;
  Eigen::VectorXd x;
};

/// Interface data handed over by the first two steps, as P1 line vectors
/// ordered by column.
struct StokesInterfaceData {
  Eigen::VectorXd q_minus;  // plate pressure at Gamma_-
  Eigen::VectorXd v;        // plate velocity at t^{n+1}
  Eigen::VectorXd u_p;      // plate flux at Gamma_-
};

/// Unsteady Stokes step with slip on Gamma_- and a normal-velocity penalty.
/// `d` must outlive the step.
class StokesStep {
 public:
  StokesStep(const Discretization& d, const PhysicalParams& params, double dt, double d_h,
             const BoundaryConditions& bc);

  StokesResult solve(const StateVector& prev, const StokesInterfaceData& iface,
                     const ForcingSpec& forcing, double t_next) const;

  Eigen::VectorXd rhs(const StateVector& prev, const StokesInterfaceData& iface,
                      const ForcingSpec& forcing, double t_next) const;
  Eigen::VectorXd dirichlet_values(double t_next) const;
  const SparseMatrix& matrix() const { return solver_->matrix(); }
  const StokesLayout& layout() const { return layout_; }

  /// P2 scalar mass and 2 (D u, D U) in vector dofs, for energy bookkeeping.
  const SparseMatrix& mass() const { return mass_; }
  const SparseMatrix& viscous() const { return visc_; }

 private:
  const Discretization& d_;
  PhysicalParams params_;
  double dt_, pen_;
  BoundaryConditions bc_;
  StokesLayout layout_;
  ResolvedDirichlet bc_u_;
  std::vector<int> constrained_;
  std::unique_ptr<ConstrainedSolver> solver_;
  SparseMatrix mass_, visc_;
};

StokesResult solve_stokes(const Discretization& d, const StateVector& prev,
                          const StokesInterfaceData& iface, const PhysicalParams& params,
                          const RunConfig& cfg, const BoundaryConditions& bc,
                          const ForcingSpec& forcing, double t_next);

}  // namespace fpsi
