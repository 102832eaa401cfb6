#pragma once

#include "fpsi/step_pressure.hpp"
#include "fpsi/step_stokes.hpp"
#include "fpsi/step_structure.hpp"

#include <array>
#include <iosfwd>
#include <memory>

namespace fpsi {

/// Energy and dissipation functionals of a discrete state. Components, in order:
/// E: rho_b|xi|^2, lambda_b|div eta|^2, 2 mu_b|D eta|^2, gamma|eta|^2,
///    H rho_p|v|^2, H^3 D|Lam|^2, H gamma_p|w|^2, c0|p|^2, c0_p|q|^2, rho_f|u|^2
/// Dsp: |kappa^{-1/2} u_b|^2, |u_p|^2 / kappa_p, 2 mu_f|D u|^2, beta|u_x|^2 on Gamma_-
struct EnergyReport {
  double t = 0.0;
  std::array<double, 10> E{};
  std::array<double, 4> Dsp{};

  double total() const;
  double dissipation() const;

  static const std::array<const char*, 10>& energy_names();
  static const std::array<const char*, 4>& dissipation_names();
};

/// Splitting scheme: pressure step, structure step, Stokes step, with the
/// interface transfers between them. Operators are factorized once.
class Scheme {
 public:
  Scheme(std::shared_ptr<const Discretization> d, const PhysicalParams& params,
         const RunConfig& cfg, const BoundaryConditions& bc, ForcingSpec forcing);

  /// One time step from prev.t to prev.t + dt.
  StateVector advance(const StateVector& prev) const;

  EnergyReport energy(const StateVector& s) const;

  StateVector zero_state() const;

  const Discretization& discretization() const { return *d_; }
  const PhysicalParams& params() const { return params_; }
  const RunConfig& config() const { return cfg_; }
  const BoundaryConditions& boundary_conditions() const { return bc_; }
  const PressureStep& pressure_step() const { return pressure_; }
  const StructureStep& structure_step() const { return structure_; }
  const StokesStep& stokes_step() const { return stokes_; }

 private:
  std::shared_ptr<const Discretization> d_;
  PhysicalParams params_;
  RunConfig cfg_;
  BoundaryConditions bc_;
  ForcingSpec forcing_;
  PressureStep pressure_;
  StructureStep structure_;
  StokesStep stokes_;
  SparseMatrix mass_b_, mass_p_, mass_f1_, div_b_, divdiv_b_, symgrad_b_, darcy_b_;
};

/// Error raised from inside the time loop, tagged with the step index.
class StepError : public SolverError {
 public:
  StepError(int step, const SolverError& e)
      : SolverError(e.system(), std::string("step ") + std::to_string(step) + ": " + e.what()),
        step_(step) {}
  int step() const { return step_; }

 private:
  int step_;
};

/// CSV header and row for the per-step energy log.
void write_energy_header(std::ostream& os);
void write_energy_row(std::ostream& os, const EnergyReport& r);

}  // namespace fpsi
