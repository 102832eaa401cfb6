#pragma once

#include "fpsi/boundary.hpp"
#include "fpsi/coupling.hpp"
#include "fpsi/sparse.hpp"

#include <memory>

namespace fpsi {

/// Unknown layout [xi_x | xi_y | Lambda]. The plate velocity v is the y
/// component of xi at the Gamma_+ vertices; the x component there is zero.
struct StructureLayout {
  int n_thick = 0, n_line = 0;

  int xi(int comp, int dof) const { return comp * n_thick + dof; }
  int lam(int col) const { return 2 * n_thick + col; }
  int size() const { return 2 * n_thick + n_line; }
};

struct StructureResult {
  Eigen::Matrix2Xd xi, eta;
  Eigen::VectorXd v, w, Lam;
  Eigen::VectorXd x;  // raw solution in StructureLayout
};

/// Elastodynamics of the thick layer and the plate bending system, solved for
/// (xi, Lambda) with eta^{n+1} = eta^n + dt xi^{n+1}. `d` must outlive the step.
class StructureStep {
 public:
  StructureStep(const Discretization& d, const PhysicalParams& params, double dt, double d_h,
                const BoundaryConditions& bc);

  /// `p_new` thick dofs, `q_new` and `u_p_new` plate dofs from the pressure step.
  StructureResult solve(const StateVector& prev, const Eigen::VectorXd& p_new,
                        const Eigen::VectorXd& q_new, const Eigen::VectorXd& u_p_new,
                        const ForcingSpec& forcing, double t_next) const;

  Eigen::VectorXd rhs(const StateVector& prev, const Eigen::VectorXd& p_new,
                      const Eigen::VectorXd& q_new, const Eigen::VectorXd& u_p_new,
                      const ForcingSpec& forcing, double t_next) const;
  Eigen::VectorXd dirichlet_values(const StateVector& prev, double t_next) const;
  const SparseMatrix& matrix() const { return solver_->matrix(); }
  const StructureLayout& layout() const { return layout_; }

  /// Thick-layer operators in vector dofs [x | y]: mass, elastic energy
  /// (lambda div div + 2 mu D:D + gamma mass) and (p, div phi).
  const SparseMatrix& vector_mass() const { return mass_; }
  const SparseMatrix& elastic() const { return elastic_; }
  const SparseMatrix& pressure_divergence() const { return pdiv_; }

 private:
  const Discretization& d_;
  PhysicalParams params_;
  double dt_, pen_;
  BoundaryConditions bc_;
  StructureLayout layout_;
  ColumnQuadrature cq_;
  ResolvedDirichlet bc_eta_;
  std::vector<int> constrained_;
  std::unique_ptr<ConstrainedSolver> solver_;
  SparseMatrix mass_, elastic_, pdiv_;
};

StructureResult solve_structure(const Discretization& d, const StateVector& prev,
                                const Eigen::VectorXd& p_new, const Eigen::VectorXd& q_new,
                                const Eigen::VectorXd& u_p_new, const PhysicalParams& params,
                                const RunConfig& cfg, const BoundaryConditions& bc,
                                const ForcingSpec& forcing, double t_next);

}  // namespace fpsi
