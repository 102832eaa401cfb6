#pragma once

#include "fpsi/scheme.hpp"

#include <array>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

namespace fpsi {

/// Relative L2 errors in the order p, q, eta, xi, w, v, u, pi.
using MmsErrors = std::array<double, 8>;
const std::array<const char*, 8>& mms_error_names();

MmsErrors mms_errors(const Discretization& d, const StateVector& s, const PhysicalParams& params);

struct MmsRun {
  MmsErrors errors{};
  std::vector<EnergyReport> energy;  // one entry per time level, starting at t = 0
  std::vector<double> exact_energy;
};

/// Runs the manufactured problem from the interpolated exact data to cfg.t_final.
MmsRun run_mms(const RunConfig& cfg, const PhysicalParams& params, bool track_energy = false);

struct ConvergenceTable {
  std::string parameter;  // "h" or "dt"
  std::vector<double> resolution;
  std::vector<MmsErrors> errors;
  MmsErrors slopes{};
};

/// Least-squares slope of log(error) against log(resolution), per variable.
MmsErrors fit_slopes(const std::vector<double>& resolution, const std::vector<MmsErrors>& errors);

/// Runs `count` independent tasks on up to `jobs` threads; results are stored
/// by index so the outcome does not depend on scheduling.
void run_parallel(int count, int jobs, const std::function<void(int)>& task);

/// `levels` are cells per unit length (h = 1/n).
ConvergenceTable convergence_space(const std::vector<int>& levels, double dt, double t_final,
                                   const PhysicalParams& params, int jobs = 1);
ConvergenceTable convergence_time(const std::vector<double>& dts, int n, double t_final,
                                  const PhysicalParams& params, int jobs = 1);

void write_convergence_csv(std::ostream& os, const ConvergenceTable& table);

struct EnergySeries {
  std::vector<double> t, numeric, exact;
  double max_relative_deviation() const;
  double relative_deviation(std::size_t k) const;
};

EnergySeries long_term_energy(int n, double dt, double t_final, const PhysicalParams& params);

/// Slacks (right minus left) of
///   |q|^2_{Gamma-} <= 2 |p|^2_{Gamma+} + 2 H |d_z q|^2
///   |avg((z + H/2) q)|^2_{Gamma+} <= (H^3 / 64) |d_z q|^2
/// for plate field q whose Gamma_+ trace is p.
std::pair<double, double> check_thm51(const Discretization& d, const Eigen::VectorXd& p,
                                      const Eigen::VectorXd& q, double H);

/// Admissible random state for the homogeneous problem: zero on essential
/// boundary dofs, shared interface traces consistent.
StateVector random_admissible_state(const Scheme& scheme, std::uint64_t seed);

/// Largest (E^{n+1} - E^n) / E^0 over `steps` isolated steps from random data.
double max_energy_increase(const Scheme& scheme, std::uint64_t seed, int steps);

}  // namespace fpsi
