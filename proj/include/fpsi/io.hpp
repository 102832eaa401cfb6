#pragma once

#include "fpsi/config.hpp"
#include "fpsi/verification.hpp"

#include <fstream>
#include <string>
#include <utility>
#include <vector>

namespace fpsi {

/// Scientific notation with 9 significant digits.
std::string format_csv(double v);

void ensure_directory(const std::string& dir);

/// Opens `dir/name` for writing; throws std::runtime_error on failure.
std::ofstream open_output(const std::string& dir, const std::string& name);

/// Two-column x,w table.
void write_profile_csv(std::ostream& os, const std::vector<double>& x, const Eigen::VectorXd& w);

/// Legacy ASCII VTK 2.0 of the fluid layer: P1 pressure pi and |u| at vertices.
void write_fluid_vtk(std::ostream& os, const Discretization& d, const StateVector& s);

/// Columns t, numeric, exact, relative_deviation.
void write_energy_series_csv(std::ostream& os, const EnergySeries& e);

/// Columns H, amplitude, extrema, diff_next; then a wide table of the profiles.
void write_h_sweep_csv(std::ostream& os, const HSweep& sw);
void write_h_sweep_profiles_csv(std::ostream& os, const HSweep& sw);

/// Resolved configuration followed by a [command] section with `entries`.
void write_manifest(std::ostream& os, const AppConfig& c, const std::string& command,
                    const std::vector<std::pair<std::string, std::string>>& entries);

}  // namespace fpsi
