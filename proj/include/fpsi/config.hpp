#pragma once

#include "fpsi/vessel.hpp"

#include <iosfwd>
#include <string>
#include <vector>

namespace fpsi {

/// Study settings for the manufactured-solution commands.
struct VerificationSettings {
  std::vector<int> space_levels{20, 40, 80};
  double space_dt = 1e-3, space_t_final = 0.1;
  std::vector<double> time_dts{0.01, 0.02, 0.04};
  int time_n = 100;
  double time_t_final = 1.0;
  int longterm_n = 60;
  double longterm_dt = 0.1, longterm_t_final = 10.0;
};

struct VesselSettings {
  double P_max = 13333.0, T_pulse = 0.003, t_star = 0.0075;
  std::vector<double> sweep_H{0.05, 0.025, 0.0125, 0.00625};
};

/// Everything a command needs. The plate thickness lives in
/// run.geometry.plate_thickness; params.H is kept equal to it.
struct AppConfig {
  RunConfig run;
  PhysicalParams params;
  VerificationSettings verification;
  VesselSettings vessel;
};

/// INI text: sections [run] [geometry] [mesh] [params] [verification] [vessel],
/// `key = value` lines, `#` or `;` comments. Lists are comma separated.
/// Unknown sections or keys and malformed values throw ConfigError. Keys left
/// out keep their defaults. A [command] section (manifest trailer) is skipped,
/// so a manifest can be fed back as a config.
AppConfig parse_config(std::istream& is);
AppConfig load_config(const std::string& path);

/// Writes every key, doubles with 17 significant digits, so that
/// parse_config(write_config(c)) == c.
void write_config(std::ostream& os, const AppConfig& c);

/// Applies one `section.key=value` override.
void apply_override(AppConfig& c, const std::string& assignment);

/// Semantic checks beyond parsing (run config, parameters). Throws ConfigError.
void validate_config(const AppConfig& c);

/// Vessel case described by the config (H from the geometry).
VesselCase vessel_case(const AppConfig& c);

/// Names of all keys in `section.key` form, in file order.
std::vector<std::string> config_keys();

bool operator==(const AppConfig& a, const AppConfig& b);

}  // namespace fpsi
