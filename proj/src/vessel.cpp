#include "fpsi/vessel.hpp"

#include "fpsi/verification.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace fpsi {

double pulse(double t, const PulseInflow& inflow) {
  if (t < 0.0 || t >= inflow.T_pulse) return 0.0;
  return 0.5 * inflow.P_max * (1.0 - std::cos(2.0 * std::numbers::pi * t / inflow.T_pulse));
}

VesselCase VesselCase::with_thickness(double H) {
  VesselCase c;
  c.H = H;
  c.params = PhysicalParams::vessel(H);
  return c;
}

VesselCase VesselCase::half_resolution() const {
  VesselCase c = *this;
  auto half = [](int n) { return (n + 1) / 2; };
  c.nx = half(nx);
  c.ny_fluid = half(ny_fluid);
  c.ny_thick = half(ny_thick);
  c.ny_plate = half(ny_plate);
  c.d_h = length / c.nx;
  return c;
}

RunConfig VesselCase::run_config() const {
  RunConfig cfg;
  cfg.geometry = {length, thick_height, H, fluid_height};
  cfg.mesh = MeshResolution::uniform(nx, ny_thick, ny_plate, ny_fluid);
  cfg.dt = dt;
  cfg.t_final = t_final;
  cfg.d_h = d_h;
  cfg.boundary_case = BoundaryCase::Vessel;
  return cfg;
}

int VesselCase::star_step() const { return static_cast<int>(std::lround(t_star / dt)); }

BoundaryConditions vessel_boundary_conditions(const PulseInflow& inflow) {
  auto bc = homogeneous_boundary_conditions(BoundaryCase::Vessel);
  // sigma n = -P_in n with n = (-1, 0) on the inlet
  bc.fluid_traction.push_back({{FacetTag::GammaIn}, [inflow](double, double, double t) {
                                 return Eigen::Vector2d(pulse(t, inflow), 0.0);
                               }});
  return bc;
}

VesselRun run_vessel(const VesselCase& c, const VesselObserver& observer) {
  if (!(c.H > 0.0)) throw ConfigError("vessel: H must be positive");
  if (std::abs(c.params.H - c.H) > 1e-15 * c.H)
    throw ConfigError("vessel: params.H does not match the case thickness");
  if (!(c.t_star >= 0.0 && c.t_star <= c.t_final))
    throw ConfigError("vessel: t_star must lie in [0, t_final]");
  const auto v = validate_params(c.params);
  if (!v.empty()) throw ConfigError("vessel: invalid parameter " + v.front().field);

  const RunConfig cfg = c.run_config();
  validate_run_config(cfg);
  auto d = std::make_shared<const Discretization>(build_discretization(cfg));
  const Scheme scheme(d, c.params, cfg, vessel_boundary_conditions(c.inflow), ForcingSpec{});

  VesselRun out;
  for (int col = 0; col < d->line_p1(); ++col) out.x.push_back(d->mesh.xgrid[col]);
  const int steps = cfg.num_steps(), star = c.star_step();

  StateVector s = scheme.zero_state();
  auto record = [&](int n) {
    out.t.push_back(s.t);
    out.w.push_back(s.w);
    out.energy.push_back(scheme.energy(s));
    if (n == star) out.w_star = s.w;
    if (observer) observer(scheme, s, n);
  };
  record(0);
  for (int n = 0; n < steps; ++n) {
    s = scheme.advance(s);
    s.t = (n + 1) * cfg.dt;
    record(n + 1);
  }
  return out;
}

double line_l2(const std::vector<double>& x, const Eigen::VectorXd& f) {
  double s = 0.0;
  for (std::size_t i = 0; i + 1 < x.size(); ++i)
    s += 0.5 * (x[i + 1] - x[i]) * (f(i) * f(i) + f(i + 1) * f(i + 1));
  return std::sqrt(s);
}

namespace {

int count_extrema(const Eigen::VectorXd& f) {
  int n = 0, last = 0;
  for (Eigen::Index i = 0; i + 1 < f.size(); ++i) {
    const double df = f(i + 1) - f(i);
    const int sgn = df > 0.0 ? 1 : (df < 0.0 ? -1 : 0);
    if (sgn == 0) continue;
    if (last != 0 && sgn != last) ++n;
    last = sgn;
  }
  return n;
}

}  // namespace

bool HSweep::differences_decreasing() const {
  for (std::size_t k = 0; k + 1 < differences.size(); ++k)
    if (!(differences[k + 1] < differences[k])) return false;
  return true;
}

bool HSweep::amplitude_nonincreasing_in_H() const {
  // H descends along the sweep, so amplitudes must not decrease along it.
  for (std::size_t k = 0; k + 1 < amplitudes.size(); ++k)
    if (amplitudes[k + 1] < amplitudes[k]) return false;
  return true;
}

HSweep h_sweep(const VesselCase& base, const std::vector<double>& H_values, int jobs) {
  if (H_values.size() < 3) throw ConfigError("h-sweep needs at least three H values");
  for (std::size_t k = 0; k + 1 < H_values.size(); ++k)
    if (H_values[k + 1] > H_values[k]) throw ConfigError("h-sweep H values must be descending");

  HSweep sw;
  sw.H = H_values;
  const int n = static_cast<int>(H_values.size());
  std::vector<VesselRun> runs(n);
  run_parallel(n, jobs, [&](int i) {
    VesselCase c = base;
    c.H = H_values[i];
    c.params.H = H_values[i];
    runs[i] = run_vessel(c);
  });
  sw.x = runs.front().x;
  for (const auto& r : runs) {
    sw.w_star.push_back(r.w_star);
    sw.amplitudes.push_back(0.5 * (r.w_star.maxCoeff() - r.w_star.minCoeff()));
    sw.extrema.push_back(count_extrema(r.w_star));
  }
  for (int k = 0; k + 1 < n; ++k)
    sw.differences.push_back(line_l2(sw.x, sw.w_star[k] - sw.w_star[k + 1]));
  return sw;
}

}  // namespace fpsi
