#pragma once

#include "fpsi/scheme.hpp"

namespace fpsi::testing {

/// Zero state with the dof counts of `d`.
StateVector zero_state(const Discretization& d);

/// One pressure step on a y-only problem (plate + thick column, p = 0 on top,
/// no flux at Gamma_-) against an independent 1D consistent-mass difference
/// scheme on the same rows. Side values are prescribed from the 1D solution.
/// Returns the largest nodal deviation relative to the largest oracle value.
double pressure_column_deviation();

/// One structure step from a uniform vertical strain eta = (0, eps y) with
/// rollers on the sides, the matching traction on top and plate load on
/// Gamma_+. Returns max |eta^{n+1} - eta| + max |xi^{n+1}| relative to max |eta|.
double uniform_strain_deviation();

/// One Stokes step from steady channel flow with slip on Gamma_- and the exact
/// traction on the sides. Returns the larger of the relative u and pi deviations.
double poiseuille_deviation();

}  // namespace fpsi::testing
