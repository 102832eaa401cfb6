#include "fpsi/config.hpp"

#include <boost/property_tree/ini_parser.hpp>
#include <boost/property_tree/ptree.hpp>

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <functional>
#include <sstream>

namespace fpsi {

namespace {

namespace pt = boost::property_tree;

struct Field {
  std::string section, key;
  std::function<std::string(const AppConfig&)> get;
  std::function<void(AppConfig&, const std::string&)> set;

  std::string name() const { return section + "." + key; }
};

std::string trim(const std::string& s) {
  const auto a = s.find_first_not_of(" \t\r\n");
  if (a == std::string::npos) return {};
  const auto b = s.find_last_not_of(" \t\r\n");
  return s.substr(a, b - a + 1);
}

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

double parse_double(const std::string& s) {
  const std::string t = trim(s);
  std::size_t pos = 0;
  double v = 0.0;
  try {
    v = std::stod(t, &pos);
  } catch (const std::exception&) {
    throw ConfigError("not a number: '" + s + "'");
  }
  if (pos != t.size()) throw ConfigError("not a number: '" + s + "'");
  return v;
}

int parse_int(const std::string& s) {
  const std::string t = trim(s);
  std::size_t pos = 0;
  int v = 0;
  try {
    v = std::stoi(t, &pos);
  } catch (const std::exception&) {
    throw ConfigError("not an integer: '" + s + "'");
  }
  if (pos != t.size()) throw ConfigError("not an integer: '" + s + "'");
  return v;
}

template <class T, class Parse>
std::vector<T> parse_list(const std::string& s, Parse parse) {
  std::vector<T> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(parse(item));
  if (out.empty()) throw ConfigError("empty list");
  return out;
}

template <class T, class Show>
std::string join(const std::vector<T>& v, Show show) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? ", " : "") + show(v[i]);
  return out;
}

template <class Ref>
Field real(std::string sec, std::string key, Ref ref) {
  return {std::move(sec), std::move(key),
          [ref](const AppConfig& c) { return fmt(ref(const_cast<AppConfig&>(c))); },
          [ref](AppConfig& c, const std::string& s) { ref(c) = parse_double(s); }};
}

template <class Ref>
Field integer(std::string sec, std::string key, Ref ref) {
  return {std::move(sec), std::move(key),
          [ref](const AppConfig& c) { return std::to_string(ref(const_cast<AppConfig&>(c))); },
          [ref](AppConfig& c, const std::string& s) { ref(c) = parse_int(s); }};
}

template <class Ref>
Field real_list(std::string sec, std::string key, Ref ref) {
  return {std::move(sec), std::move(key),
          [ref](const AppConfig& c) { return join(ref(const_cast<AppConfig&>(c)), fmt); },
          [ref](AppConfig& c, const std::string& s) {
            ref(c) = parse_list<double>(s, parse_double);
          }};
}

template <class Ref>
Field int_list(std::string sec, std::string key, Ref ref) {
  return {std::move(sec), std::move(key),
          [ref](const AppConfig& c) {
            return join(ref(const_cast<AppConfig&>(c)), [](int i) { return std::to_string(i); });
          },
          [ref](AppConfig& c, const std::string& s) { ref(c) = parse_list<int>(s, parse_int); }};
}

const std::vector<Field>& fields() {
  static const std::vector<Field> f = [] {
    std::vector<Field> v;
    v.push_back({"run", "boundary_case",
                 [](const AppConfig& c) { return to_string(c.run.boundary_case); },
                 [](AppConfig& c, const std::string& s) {
                   c.run.boundary_case = boundary_case_from_string(trim(s));
                 }});
    v.push_back(real("run", "dt", [](AppConfig& c) -> double& { return c.run.dt; }));
    v.push_back(real("run", "t_final", [](AppConfig& c) -> double& { return c.run.t_final; }));
    v.push_back(real("run", "d_h", [](AppConfig& c) -> double& { return c.run.d_h; }));
    v.push_back(integer("run", "output_every",
                        [](AppConfig& c) -> int& { return c.run.output_every; }));
    v.push_back({"run", "output_dir", [](const AppConfig& c) { return c.run.output_dir; },
                 [](AppConfig& c, const std::string& s) { c.run.output_dir = trim(s); }});

    v.push_back(real("geometry", "length",
                     [](AppConfig& c) -> double& { return c.run.geometry.length; }));
    v.push_back(real("geometry", "thick_height",
                     [](AppConfig& c) -> double& { return c.run.geometry.thick_height; }));
    v.push_back({"geometry", "plate_thickness",
                 [](const AppConfig& c) { return fmt(c.run.geometry.plate_thickness); },
                 [](AppConfig& c, const std::string& s) {
                   c.run.geometry.plate_thickness = parse_double(s);
                   c.params.H = c.run.geometry.plate_thickness;
                 }});
    v.push_back(real("geometry", "fluid_height",
                     [](AppConfig& c) -> double& { return c.run.geometry.fluid_height; }));

    v.push_back(integer("mesh", "nx", [](AppConfig& c) -> int& { return c.run.mesh.nx_thick; }));
    v.back().set = [](AppConfig& c, const std::string& s) {
      c.run.mesh.nx_thick = c.run.mesh.nx_plate = c.run.mesh.nx_fluid = parse_int(s);
    };
    v.push_back(
        integer("mesh", "ny_thick", [](AppConfig& c) -> int& { return c.run.mesh.ny_thick; }));
    v.push_back(
        integer("mesh", "ny_plate", [](AppConfig& c) -> int& { return c.run.mesh.ny_plate; }));
    v.push_back(
        integer("mesh", "ny_fluid", [](AppConfig& c) -> int& { return c.run.mesh.ny_fluid; }));

    auto par = [&](const char* key, double PhysicalParams::*m) {
      v.push_back(real("params", key, [m](AppConfig& c) -> double& { return c.params.*m; }));
    };
    par("rho_b", &PhysicalParams::rho_b);
    par("mu_b", &PhysicalParams::mu_b);
    par("lambda_b", &PhysicalParams::lambda_b);
    par("c0", &PhysicalParams::c0);
    par("alpha", &PhysicalParams::alpha);
    v.push_back(real("params", "kappa_xx", [](AppConfig& c) -> double& { return c.params.kappa(0, 0); }));
    v.push_back({"params", "kappa_xy", [](const AppConfig& c) { return fmt(c.params.kappa(0, 1)); },
                 [](AppConfig& c, const std::string& s) {
                   c.params.kappa(0, 1) = c.params.kappa(1, 0) = parse_double(s);
                 }});
    v.push_back(real("params", "kappa_yy", [](AppConfig& c) -> double& { return c.params.kappa(1, 1); }));
    par("gamma", &PhysicalParams::gamma);
    par("rho_p", &PhysicalParams::rho_p);
    par("c0_p", &PhysicalParams::c0_p);
    par("alpha_p", &PhysicalParams::alpha_p);
    par("kappa_p", &PhysicalParams::kappa_p);
    par("bendD", &PhysicalParams::bendD);
    par("gamma_p", &PhysicalParams::gamma_p);
    par("rho_f", &PhysicalParams::rho_f);
    par("mu_f", &PhysicalParams::mu_f);
    par("beta", &PhysicalParams::beta);
    par("gamma_pen", &PhysicalParams::gamma_pen);

    v.push_back(int_list("verification", "space_levels",
                         [](AppConfig& c) -> std::vector<int>& { return c.verification.space_levels; }));
    v.push_back(real("verification", "space_dt",
                     [](AppConfig& c) -> double& { return c.verification.space_dt; }));
    v.push_back(real("verification", "space_t_final",
                     [](AppConfig& c) -> double& { return c.verification.space_t_final; }));
    v.push_back(real_list("verification", "time_dts",
                          [](AppConfig& c) -> std::vector<double>& { return c.verification.time_dts; }));
    v.push_back(integer("verification", "time_n",
                        [](AppConfig& c) -> int& { return c.verification.time_n; }));
    v.push_back(real("verification", "time_t_final",
                     [](AppConfig& c) -> double& { return c.verification.time_t_final; }));
    v.push_back(integer("verification", "longterm_n",
                        [](AppConfig& c) -> int& { return c.verification.longterm_n; }));
    v.push_back(real("verification", "longterm_dt",
                     [](AppConfig& c) -> double& { return c.verification.longterm_dt; }));
    v.push_back(real("verification", "longterm_t_final",
                     [](AppConfig& c) -> double& { return c.verification.longterm_t_final; }));

    v.push_back(real("vessel", "P_max", [](AppConfig& c) -> double& { return c.vessel.P_max; }));
    v.push_back(real("vessel", "T_pulse", [](AppConfig& c) -> double& { return c.vessel.T_pulse; }));
    v.push_back(real("vessel", "t_star", [](AppConfig& c) -> double& { return c.vessel.t_star; }));
    v.push_back(real_list("vessel", "sweep_H",
                          [](AppConfig& c) -> std::vector<double>& { return c.vessel.sweep_H; }));
    return v;
  }();
  return f;
}

const Field& find_field(const std::string& section, const std::string& key) {
  for (const auto& f : fields())
    if (f.section == section && f.key == key) return f;
  throw ConfigError("unknown config key '" + section + "." + key + "'");
}

void set_field(AppConfig& c, const std::string& section, const std::string& key,
               const std::string& value) {
  const auto& f = find_field(section, key);
  try {
    f.set(c, value);
  } catch (const ConfigError& e) {
    throw ConfigError(f.name() + ": " + e.what());
  }
}

}  // namespace

AppConfig parse_config(std::istream& is) {
  pt::ptree tree;
  try {
    pt::read_ini(is, tree);
  } catch (const pt::ini_parser_error& e) {
    throw ConfigError(std::string("config syntax: ") + e.what());
  }
  AppConfig c;
  for (const auto& [section, body] : tree) {
    if (section == "command") continue;  // manifest trailer
    if (!body.data().empty()) throw ConfigError("key '" + section + "' outside a section");
    if (std::none_of(fields().begin(), fields().end(),
                     [&](const Field& f) { return f.section == section; }))
      throw ConfigError("unknown config section [" + section + "]");
    for (const auto& [key, value] : body) set_field(c, section, key, value.data());
  }
  return c;
}

AppConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file '" + path + "'");
  try {
    return parse_config(in);
  } catch (const ConfigError& e) {
    throw ConfigError(path + ": " + e.what());
  }
}

void write_config(std::ostream& os, const AppConfig& c) {
  std::string section;
  for (const auto& f : fields()) {
    if (f.section != section) {
      if (!section.empty()) os << '\n';
      section = f.section;
      os << '[' << section << "]\n";
    }
    os << f.key << " = " << f.get(c) << '\n';
  }
}

void apply_override(AppConfig& c, const std::string& assignment) {
  const auto eq = assignment.find('=');
  const std::string name = trim(assignment.substr(0, eq));
  const auto dot = name.find('.');
  if (eq == std::string::npos || dot == std::string::npos)
    throw ConfigError("override must look like section.key=value, got '" + assignment + "'");
  set_field(c, name.substr(0, dot), name.substr(dot + 1), assignment.substr(eq + 1));
}

void validate_config(const AppConfig& c) {
  validate_run_config(c.run);
  const auto v = validate_params(c.params);
  if (!v.empty()) {
    std::string msg = "invalid parameters:";
    for (const auto& e : v) msg += " " + e.field + " (" + e.predicate + ")";
    throw ConfigError(msg);
  }
  if (c.params.H != c.run.geometry.plate_thickness)
    throw ConfigError("params.H differs from geometry.plate_thickness");
  if (!(c.vessel.P_max >= 0.0)) throw ConfigError("vessel.P_max must be non-negative");
  if (!(c.vessel.T_pulse > 0.0)) throw ConfigError("vessel.T_pulse must be positive");
}

VesselCase vessel_case(const AppConfig& c) {
  VesselCase v;
  v.H = c.run.geometry.plate_thickness;
  v.length = c.run.geometry.length;
  v.fluid_height = c.run.geometry.fluid_height;
  v.thick_height = c.run.geometry.thick_height;
  v.nx = c.run.mesh.nx_fluid;
  v.ny_fluid = c.run.mesh.ny_fluid;
  v.ny_thick = c.run.mesh.ny_thick;
  v.ny_plate = c.run.mesh.ny_plate;
  v.d_h = c.run.d_h;
  v.dt = c.run.dt;
  v.t_final = c.run.t_final;
  v.t_star = c.vessel.t_star;
  v.inflow = {c.vessel.P_max, c.vessel.T_pulse};
  v.params = c.params;
  v.params.H = v.H;
  return v;
}

std::vector<std::string> config_keys() {
  std::vector<std::string> out;
  for (const auto& f : fields()) out.push_back(f.name());
  return out;
}

bool operator==(const AppConfig& a, const AppConfig& b) {
  std::ostringstream sa, sb;
  write_config(sa, a);
  write_config(sb, b);
  return sa.str() == sb.str();
}

}  // namespace fpsi
