#include "fpsi/io.hpp"
#include "fpsi/mms.hpp"
#include "fpsi/stability.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>

using namespace fpsi;

namespace {

struct Common {
  std::string config;
  std::string output;
  int jobs = 1;
  std::vector<std::string> sets;
};

void add_common(CLI::App* sub, Common& c) {
  sub->add_option("--config", c.config, "INI configuration file")->required();
  sub->add_option("--output", c.output, "output directory (overrides run.output_dir)");
  sub->add_option("--jobs", c.jobs, "parallel runs in sweeps")->check(CLI::PositiveNumber);
  sub->add_option("--set", c.sets, "override, section.key=value (repeatable)");
}

std::string sci(double v) { return format_csv(v); }

class Command {
 public:
  Command(std::string name, const Common& common) : name_(std::move(name)), common_(common) {
    cfg_ = load_config(common.config);
    for (const auto& s : common.sets) apply_override(cfg_, s);
    if (!common.output.empty()) cfg_.run.output_dir = common.output;
  }

  AppConfig& config() { return cfg_; }
  const std::string& dir() const { return cfg_.run.output_dir; }

  /// Validates, creates the output directory and writes the manifest.
  void start(std::vector<std::pair<std::string, std::string>> extra = {}) {
    validate_config(cfg_);
    ensure_directory(dir());
    extra.insert(extra.begin(), {"jobs", std::to_string(common_.jobs)});
    auto os = open_output(dir(), "manifest.ini");
    write_manifest(os, cfg_, name_, extra);
  }

  int jobs() const { return common_.jobs; }

 private:
  std::string name_;
  Common common_;
  AppConfig cfg_;
};

void require_case(const AppConfig& c, BoundaryCase bc, const char* cmd) {
  if (c.run.boundary_case != bc)
    throw ConfigError(std::string(cmd) + " needs run.boundary_case = " + to_string(bc));
}

int run_mms_cmd(const Common& common) {
  Command cmd("run-mms", common);
  require_case(cmd.config(), BoundaryCase::Mms, "run-mms");
  cmd.start();
  const auto& c = cmd.config();
  const auto r = run_mms(c.run, c.params, true);
  {
    auto os = open_output(cmd.dir(), "errors.csv");
    os << "t";
    for (const char* n : mms_error_names()) os << ',' << n;
    os << '\n' << sci(c.run.t_final);
    for (double e : r.errors) os << ',' << sci(e);
    os << '\n';
  }
  {
    auto os = open_output(cmd.dir(), "energy.csv");
    write_energy_header(os);
    for (std::size_t k = 0; k < r.energy.size(); k += c.run.output_every)
      write_energy_row(os, r.energy[k]);
  }
  for (std::size_t i = 0; i < r.errors.size(); ++i)
    std::printf("%-6s %s\n", mms_error_names()[i], sci(r.errors[i]).c_str());
  return 0;
}

void print_table(const ConvergenceTable& t) {
  std::printf("slopes:");
  for (std::size_t i = 0; i < t.slopes.size(); ++i)
    std::printf(" %s=%.3f", mms_error_names()[i], t.slopes[i]);
  std::printf("\n");
}

int conv_space_cmd(const Common& common, const std::optional<std::vector<int>>& levels) {
  Command cmd("conv-space", common);
  if (levels) cmd.config().verification.space_levels = *levels;
  cmd.start();
  const auto& v = cmd.config().verification;
  const auto t =
      convergence_space(v.space_levels, v.space_dt, v.space_t_final, cmd.config().params, cmd.jobs());
  auto os = open_output(cmd.dir(), "conv_space.csv");
  write_convergence_csv(os, t);
  print_table(t);
  return 0;
}

int conv_time_cmd(const Common& common, const std::optional<std::vector<double>>& dts) {
  Command cmd("conv-time", common);
  if (dts) cmd.config().verification.time_dts = *dts;
  cmd.start();
  const auto& v = cmd.config().verification;
  const auto t =
      convergence_time(v.time_dts, v.time_n, v.time_t_final, cmd.config().params, cmd.jobs());
  auto os = open_output(cmd.dir(), "conv_time.csv");
  write_convergence_csv(os, t);
  print_table(t);
  return 0;
}

int energy_longterm_cmd(const Common& common) {
  Command cmd("energy-longterm", common);
  cmd.start();
  const auto& v = cmd.config().verification;
  const auto e = long_term_energy(v.longterm_n, v.longterm_dt, v.longterm_t_final, cmd.config().params);
  auto os = open_output(cmd.dir(), "energy_longterm.csv");
  write_energy_series_csv(os, e);
  std::printf("max relative deviation %s\n", sci(e.max_relative_deviation()).c_str());
  return 0;
}

int run_vessel_cmd(const Common& common, const std::optional<double>& H) {
  Command cmd("run-vessel", common);
  if (H) cmd.config().run.geometry.plate_thickness = cmd.config().params.H = *H;
  require_case(cmd.config(), BoundaryCase::Vessel, "run-vessel");
  cmd.start();
  const auto vc = vessel_case(cmd.config());
  const int every = cmd.config().run.output_every;
  const auto r = run_vessel(vc, [&](const Scheme& scheme, const StateVector& s, int n) {
    if (n % every != 0) return;
    char name[32];
    std::snprintf(name, sizeof name, "w_%05d.csv", n);
    auto wp = open_output(cmd.dir(), name);
    std::vector<double> x(scheme.discretization().line_p1());
    for (int i = 0; i < static_cast<int>(x.size()); ++i) x[i] = scheme.discretization().mesh.xgrid[i];
    write_profile_csv(wp, x, s.w);
    std::snprintf(name, sizeof name, "fluid_%05d.vtk", n);
    auto vtk = open_output(cmd.dir(), name);
    write_fluid_vtk(vtk, scheme.discretization(), s);
  });
  {
    auto os = open_output(cmd.dir(), "w_star.csv");
    write_profile_csv(os, r.x, r.w_star);
  }
  {
    auto os = open_output(cmd.dir(), "energy.csv");
    write_energy_header(os);
    for (const auto& e : r.energy) write_energy_row(os, e);
  }
  std::printf("w(., t*) range [%s, %s]\n", sci(r.w_star.minCoeff()).c_str(),
              sci(r.w_star.maxCoeff()).c_str());
  return 0;
}

int h_sweep_cmd(const Common& common, const std::optional<std::vector<double>>& Hs, bool half) {
  Command cmd("h-sweep", common);
  auto& c = cmd.config();
  if (Hs) c.vessel.sweep_H = *Hs;
  require_case(c, BoundaryCase::Vessel, "h-sweep");
  if (half) {
    VesselCase h = vessel_case(c).half_resolution();
    c.run.mesh = MeshResolution::uniform(h.nx, h.ny_thick, h.ny_plate, h.ny_fluid);
    c.run.d_h = h.d_h;
  }
  cmd.start();
  const auto sw = h_sweep(vessel_case(c), c.vessel.sweep_H, cmd.jobs());
  {
    auto os = open_output(cmd.dir(), "h_sweep.csv");
    write_h_sweep_csv(os, sw);
  }
  {
    auto os = open_output(cmd.dir(), "h_sweep_profiles.csv");
    write_h_sweep_profiles_csv(os, sw);
  }
  for (std::size_t k = 0; k < sw.H.size(); ++k)
    std::printf("H=%s amplitude=%s extrema=%d\n", sci(sw.H[k]).c_str(),
                sci(sw.amplitudes[k]).c_str(), sw.extrema[k]);
  std::printf("differences decreasing: %s\namplitude non-increasing in H: %s\n",
              sw.differences_decreasing() ? "yes" : "no",
              sw.amplitude_nonincreasing_in_H() ? "yes" : "no");
  return 0;
}

int check_stability_cmd(const Common& common) {
  Command cmd("check-stability", common);
  cmd.start();
  const auto& c = cmd.config();
  const auto pc = check_parameter_conditions(c.params);
  const Discretization d = build_discretization(c.run);
  const auto k = estimate_constants(d, c.params);
  const double b54 = dt_bound_thm54(c.params, k);
  const double b55 = dt_bound_thm55_value(c.params, k);
  auto os = open_output(cmd.dir(), "stability.csv");
  os << "quantity,value\n";
  auto row = [&](const char* n, double v) {
    os << n << ',' << sci(v) << '\n';
    std::printf("%-22s %s\n", n, sci(v).c_str());
  };
  std::printf("thick condition alpha^2 < c0 lambda_b: %s\n", pc.thick ? "true" : "false");
  std::printf("plate condition alpha_p^2 < 12 c0_p D: %s\n", pc.plate ? "true" : "false");
  os << "thick_condition," << (pc.thick ? 1 : 0) << "\nplate_condition," << (pc.plate ? 1 : 0)
     << '\n';
  row("h", k.h);
  row("C_P", k.C_P);
  row("C_TR", k.C_TR);
  row("C_INV", k.C_INV);
  row("B_INV", k.B_INV);
  row("C_TI", k.C_TI);
  row("A_TI", k.A_TI);
  row("dt_bound_isolated", b54);
  row("dt_bound_conditioned", b55);
  row("dt", c.run.dt);
  if (!(pc.thick && pc.plate))
    std::printf("parameter conditions fail; the conditioned bound does not apply\n");
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Splitting-scheme solver for fluid / poroelastic plate / thick Biot layer flow"};
  app.require_subcommand(1);

  Common common;
  std::optional<std::vector<int>> levels;
  std::optional<std::vector<double>> dts, Hs;
  std::optional<double> H;
  bool half = false;

  auto* mms = app.add_subcommand("run-mms", "manufactured-solution run with errors and energy");
  auto* space = app.add_subcommand("conv-space", "spatial convergence study");
  auto* time = app.add_subcommand("conv-time", "temporal convergence study");
  auto* lt = app.add_subcommand("energy-longterm", "numerical vs exact energy over a long run");
  auto* vessel = app.add_subcommand("run-vessel", "pulse-driven vessel flow");
  auto* sweep = app.add_subcommand("h-sweep", "vessel runs over decreasing plate thickness");
  auto* stab = app.add_subcommand("check-stability", "parameter conditions and time-step bounds");
  for (auto* s : {mms, space, time, lt, vessel, sweep, stab}) add_common(s, common);
  space->add_option("--levels", levels, "cells per unit length, e.g. 40,60,80")->delimiter(',');
  time->add_option("--dts", dts, "time steps, e.g. 0.01,0.02,0.04")->delimiter(',');
  vessel->add_option("--H", H, "plate thickness (cm)");
  sweep->add_option("--H-values", Hs, "descending plate thicknesses")->delimiter(',');
  sweep->add_flag("--half", half, "halve every cell count (smoke run)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  }

  try {
    if (mms->parsed()) return run_mms_cmd(common);
    if (space->parsed()) return conv_space_cmd(common, levels);
    if (time->parsed()) return conv_time_cmd(common, dts);
    if (lt->parsed()) return energy_longterm_cmd(common);
    if (vessel->parsed()) return run_vessel_cmd(common, H);
    if (sweep->parsed()) return h_sweep_cmd(common, Hs, half);
    if (stab->parsed()) return check_stability_cmd(common);
  } catch (const ConfigError& e) {
    std::cerr << "configuration error: " << e.what() << '\n';
    return 1;
  } catch (const SolverError& e) {
    std::cerr << "solver error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 1;
}
