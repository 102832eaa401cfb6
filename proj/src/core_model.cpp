#include "fpsi/core_model.hpp"

#include <Eigen/Eigenvalues>

#include <cmath>

namespace fpsi {

double PhysicalParams::k_min() const {
  Eigen::SelfAdjointEigenSolver<Eigen::Matrix2d> es(kappa, Eigen::EigenvaluesOnly);
  return es.eigenvalues()(0);
}

PhysicalParams PhysicalParams::unit() { return PhysicalParams{}; }

double plate_bending_stiffness(double mu_b, double lambda_b) {
  return 4.0 * mu_b * (lambda_b + mu_b) / (3.0 * (lambda_b + 2.0 * mu_b));
}

PhysicalParams PhysicalParams::vessel(double H) {
  PhysicalParams p;
  p.rho_f = 1.0;
  p.mu_f = 0.035;
  p.rho_b = 1.1;
  p.rho_p = 1.1;
  p.mu_b = 5.58e5;
  p.lambda_b = 1.7e6;
  p.kappa = 1e-8 * Eigen::Matrix2d::Identity();
  p.kappa_p = 1e-8;
  p.c0 = 1e-3;
  p.c0_p = 1e-3;
  p.alpha = 1.0;
  p.alpha_p = 1.0;
  p.gamma = 4e6;
  p.gamma_p = 4e6;
  p.beta = 1.0;
  p.gamma_pen = 1.2e3;
  p.bendD = plate_bending_stiffness(p.mu_b, p.lambda_b);
  p.H = H;
  return p;
}

std::vector<ParamViolation> validate_params(const PhysicalParams& p) {
  std::vector<ParamViolation> out;
  auto positive = [&](const char* name, double v) {
    if (!(v > 0.0) || !std::isfinite(v)) out.push_back({name, "> 0"});
  };
  auto nonneg = [&](const char* name, double v) {
    if (!(v >= 0.0) || !std::isfinite(v)) out.push_back({name, ">= 0"});
  };
  positive("rho_b", p.rho_b);
  positive("mu_b", p.mu_b);
  nonneg("lambda_b", p.lambda_b);
  positive("c0", p.c0);
  nonneg("alpha", p.alpha);
  nonneg("gamma", p.gamma);
  positive("rho_p", p.rho_p);
  positive("c0_p", p.c0_p);
  nonneg("alpha_p", p.alpha_p);
  positive("kappa_p", p.kappa_p);
  positive("bendD", p.bendD);
  nonneg("gamma_p", p.gamma_p);
  positive("H", p.H);
  positive("rho_f", p.rho_f);
  positive("mu_f", p.mu_f);
  nonneg("beta", p.beta);
  nonneg("gamma_pen", p.gamma_pen);
  if (!p.kappa.allFinite() || std::abs(p.kappa(0, 1) - p.kappa(1, 0)) >
                                   1e-14 * p.kappa.cwiseAbs().maxCoeff()) {
    out.push_back({"kappa", "symmetric"});
  } else if (!(p.k_min() > 0.0)) {
    out.push_back({"kappa", "positive definite"});
  }
  return out;
}

ParameterConditions check_parameter_conditions(const PhysicalParams& p) {
  return {p.alpha * p.alpha < p.c0 * p.lambda_b,
          p.alpha_p * p.alpha_p < 12.0 * p.c0_p * p.bendD};
}

std::string to_string(BoundaryCase c) { return c == BoundaryCase::Mms ? "mms" : "vessel"; }

BoundaryCase boundary_case_from_string(const std::string& s) {
  if (s == "mms") return BoundaryCase::Mms;
  if (s == "vessel") return BoundaryCase::Vessel;
  throw ConfigError("unknown boundary case '" + s + "' (expected mms or vessel)");
}

MeshResolution MeshResolution::uniform(int nx, int ny_thick, int ny_plate, int ny_fluid) {
  return {nx, nx, nx, ny_thick, ny_plate, ny_fluid};
}

int RunConfig::num_steps() const {
  return static_cast<int>(std::llround(t_final / dt));
}

void validate_run_config(const RunConfig& cfg) {
  if (!(cfg.dt > 0.0)) throw ConfigError("dt must be positive");
  if (!(cfg.t_final >= cfg.dt)) throw ConfigError("t_final must be at least dt");
  if (!(cfg.d_h > 0.0)) throw ConfigError("d_h must be positive");
  const auto& g = cfg.geometry;
  if (!(g.length > 0.0 && g.thick_height > 0.0 && g.plate_thickness > 0.0 &&
        g.fluid_height > 0.0)) {
    throw ConfigError("subdomain extents must be positive");
  }
  const auto& m = cfg.mesh;
  if (m.nx_thick <= 0 || m.nx_plate <= 0 || m.nx_fluid <= 0 || m.ny_thick <= 0 ||
      m.ny_plate <= 0 || m.ny_fluid <= 0) {
    throw ConfigError("mesh resolutions must be positive");
  }
  if (m.nx_thick != m.nx_plate || m.nx_plate != m.nx_fluid) {
    throw ConfigError("horizontal resolutions differ across subdomains; columns cannot align");
  }
  if (cfg.output_every <= 0) throw ConfigError("output_every must be positive");
  const double steps = cfg.t_final / cfg.dt;
  if (std::abs(steps - std::round(steps)) > 1e-9 * std::max(1.0, steps)) {
    throw ConfigError("t_final must be an integer multiple of dt");
  }
}

}  // namespace fpsi
