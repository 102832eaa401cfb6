#pragma once

#include "fpsi/boundary.hpp"

namespace fpsi {

/// Manufactured solution on [0,1] x [-2,1] in computational coordinates:
/// thick layer y in [0,1], plate y in [-H,0], fluid below. Line fields (w, v,
/// Lam) ignore their y argument.
struct MmsSolution {
  ScalarField p, q, pi, u_p, w, v, Lam;
  VectorField eta, xi, u, u_b;
  std::function<Eigen::Matrix2d(double, double, double)> grad_eta;  // rows are components
  std::function<Eigen::Matrix2d(double, double, double)> grad_u;
};

MmsSolution mms_solution(const PhysicalParams& params);

/// Closed-form forcings obtained by substituting the manufactured fields into
/// the thick Biot, plate and Stokes equations.
ForcingSpec generate_forcings(const PhysicalParams& params);

/// Exact Dirichlet data: p and eta on the outer thick boundary, u on the outer
/// fluid boundary.
BoundaryConditions mms_boundary_conditions(const PhysicalParams& params);

/// Geometry and mesh for the manufactured problem at n cells per unit length.
RunConfig mms_run_config(int n, double dt, double t_final);

/// Interpolated exact state at time t.
StateVector mms_initial_state(const Discretization& d, const PhysicalParams& params, double t);

/// Energy components of the analytic solution, computed by tensor Gauss
/// quadrature on the three rectangles. Same ordering as EnergyReport.
std::array<double, 10> mms_exact_energy_parts(const PhysicalParams& params, double t);
double mms_exact_energy(const PhysicalParams& params, double t);

}  // namespace fpsi
