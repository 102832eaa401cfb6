#pragma once

#include "fpsi/boundary.hpp"
#include "fpsi/coupling.hpp"
#include "fpsi/sparse.hpp"

#include <memory>

namespace fpsi {

/// Unknown layout [P | u_b,x | u_b,y | u_p], where P is the pressure on the
/// plate + thick band (q below Gamma_+, p above, one shared row).
struct PressureLayout {
  int n_pressure = 0, n_thick = 0, n_plate = 0;
  int thick_shift = 0;  // pressure dof of thick dof i is i + thick_shift

  int ubx() const { return n_pressure; }
  int uby() const { return n_pressure + n_thick; }
  int up() const { return n_pressure + 2 * n_thick; }
  int size() const { return n_pressure + 2 * n_thick + n_plate; }
};

struct PressureResult {
  Eigen::VectorXd p, q, u_p;
  Eigen::Matrix2Xd u_b;
  Eigen::VectorXd x;  // raw solution in PressureLayout
};

/// Darcy pressure step on the thick layer and the plate. The operator is
/// assembled and factorized once; `solve` only builds a right-hand side.
/// `d` must outlive the step.
class PressureStep {
 public:
  PressureStep(const Discretization& d, const PhysicalParams& params, double dt, double d_h,
               const BoundaryConditions& bc);

  PressureResult solve(const StateVector& prev, const ForcingSpec& forcing, double t_next) const;

  Eigen::VectorXd rhs(const StateVector& prev, const ForcingSpec& forcing, double t_next) const;
  Eigen::VectorXd dirichlet_values(double t_next) const;
  const SparseMatrix& matrix() const { return solver_->matrix(); }
  const PressureLayout& layout() const { return layout_; }

 private:
  const Discretization& d_;
  PhysicalParams params_;
  double dt_, pen_;
  BoundaryConditions bc_;
  PressureLayout layout_;
  ResolvedDirichlet bc_p_, bc_ub_, bc_up_;
  std::vector<int> constrained_;
  std::unique_ptr<ConstrainedSolver> solver_;
  SparseMatrix mass_b_, mass_p_;  // thick and plate P1 mass in their own dofs
};

/// One-shot convenience wrapper.
PressureResult solve_pressure(const Discretization& d, const StateVector& prev,
                              const PhysicalParams& params, const RunConfig& cfg,
                              const BoundaryConditions& bc, const ForcingSpec& forcing,
                              double t_next);

}  // namespace fpsi
