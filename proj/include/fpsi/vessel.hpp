#pragma once

#include "fpsi/scheme.hpp"

#include <functional>
#include <vector>

namespace fpsi {

struct PulseInflow {
  double P_max = 13333.0;  // dyne/cm^2
  double T_pulse = 0.003;  // s
};

/// Inlet pressure 1/2 P_max (1 - cos(2 pi t / T_pulse)) on [0, T_pulse), zero after.
double pulse(double t, const PulseInflow& inflow);

/// Pressure-driven flow in a channel lined by a plate and a thick wall.
/// Lengths in cm; the default mesh is the full resolution.
struct VesselCase {
  double H = 0.05;
  double length = 5.0, fluid_height = 0.5, thick_height = 0.1;
  int nx = 300, ny_fluid = 25, ny_thick = 4, ny_plate = 3;
  double d_h = 5.0 / 300.0;  // penalty scale, the horizontal spacing
  double dt = 5e-4, t_final = 0.014, t_star = 0.0075;
  PulseInflow inflow;
  PhysicalParams params = PhysicalParams::vessel(0.05);

  static VesselCase with_thickness(double H);
  /// Every cell count halved (rounded up), d_h = length / nx, same time step.
  VesselCase half_resolution() const;
  RunConfig run_config() const;
  /// Step index whose time level is closest to t_star.
  int star_step() const;
};

/// Physical boundary list: p = 0 on the drained top, eta = 0 and u_b . n = 0 on
/// the immobile ends, slip on the symmetry axis, pulse traction at the inlet.
BoundaryConditions vessel_boundary_conditions(const PulseInflow& inflow);

struct VesselRun {
  std::vector<double> x;               // interface columns
  std::vector<double> t;               // time levels, starting at 0
  std::vector<Eigen::VectorXd> w;      // w(x, t_k)
  std::vector<EnergyReport> energy;    // per time level
  Eigen::VectorXd w_star;              // w(x, t_star)
};

/// Called after each step (and once for the initial state).
using VesselObserver = std::function<void(const Scheme&, const StateVector&, int step)>;

VesselRun run_vessel(const VesselCase& c, const VesselObserver& observer = {});

struct HSweep {
  std::vector<double> H;
  std::vector<double> x;
  std::vector<Eigen::VectorXd> w_star;
  std::vector<double> differences;  // ||w_k - w_{k+1}||_L2 per successive pair
  std::vector<double> amplitudes;   // (max - min) / 2 of w_star per H
  std::vector<int> extrema;         // interior local extrema of w_star per H

  bool differences_decreasing() const;
  /// Amplitude does not grow as H grows (H listed in descending order).
  bool amplitude_nonincreasing_in_H() const;
};

/// `base` fixes everything except H. Values must be given in descending order.
HSweep h_sweep(const VesselCase& base, const std::vector<double>& H_values, int jobs = 1);

/// Trapezoidal L2 norm of nodal values on the grid `x`.
double line_l2(const std::vector<double>& x, const Eigen::VectorXd& f);

}  // namespace fpsi
