#include "fpsi/mms.hpp"

#include "fpsi/quadrature.hpp"

#include <cmath>
#include <numbers>

namespace fpsi {

namespace {

constexpr double kC = 2.0 * std::numbers::pi;

double T1(double t) { return t + 1.0; }
double T2(double t) { return 0.5 * t * t + t + 1.0; }

// (1/H) int_{-H}^0 (y + H/2) sin(c y) dy
double weighted_sine_average(double H) {
  return (-0.5 * H / kC - 0.5 * H * std::cos(kC * H) / kC + std::sin(kC * H) / (kC * kC)) / H;
}

}  // namespace

MmsSolution mms_solution(const PhysicalParams& P) {
  const double c = kC;
  const Eigen::Matrix2d K = P.kappa;
  const double kp = P.kappa_p;
  MmsSolution s;
  s.p = [c](double x, double y, double t) {
    return c * y * std::cos(c * x) * std::cos(y) * T1(t);
  };
  s.q = [c](double x, double y, double t) {
    return std::cos(c * x) * std::sin(c * y) * T1(t);
  };
  s.pi = [c](double x, double y, double t) {
    return 2.0 * std::sin(x) * std::cos(c * y) * T1(t);
  };
  s.u_p = [c, kp](double x, double y, double t) {
    return -kp * c * std::cos(c * x) * std::cos(c * y) * T1(t);
  };
  s.w = [c](double x, double, double t) { return c * std::cos(c * x) * T2(t); };
  s.v = [c](double x, double, double t) { return c * std::cos(c * x) * T1(t); };
  s.Lam = [c](double x, double, double t) { return c * c * c * std::cos(c * x) * T2(t); };
  s.eta = [c](double x, double y, double t) {
    return Eigen::Vector2d(std::sin(c * x) * std::sin(c * y) * T1(t),
                           c * std::cos(c * x) * std::cos(c * y) * T2(t));
  };
  s.xi = [c](double x, double y, double t) {
    return Eigen::Vector2d(std::sin(c * x) * std::sin(c * y),
                           c * std::cos(c * x) * std::cos(c * y) * T1(t));
  };
  s.u = [](double x, double y, double t) {
    const double e = std::exp(-(y + 1.0));
    return Eigen::Vector2d(std::cos(x) * e * T1(t), std::sin(x) * (1.0 - e) * T1(t));
  };
  s.u_b = [c, K](double x, double y, double t) {
    const Eigen::Vector2d g(-c * c * y * std::sin(c * x) * std::cos(y) * T1(t),
                            c * std::cos(c * x) * (std::cos(y) - y * std::sin(y)) * T1(t));
    return Eigen::Vector2d(-K * g);
  };
  s.grad_eta = [c](double x, double y, double t) {
    Eigen::Matrix2d G;
    G << c * std::cos(c * x) * std::sin(c * y) * T1(t), c * std::sin(c * x) * std::cos(c * y) * T1(t),
        -c * c * std::sin(c * x) * std::cos(c * y) * T2(t),
        -c * c * std::cos(c * x) * std::sin(c * y) * T2(t);
    return G;
  };
  s.grad_u = [](double x, double y, double t) {
    const double e = std::exp(-(y + 1.0));
    Eigen::Matrix2d G;
    G << -std::sin(x) * e * T1(t), -std::cos(x) * e * T1(t), std::cos(x) * (1.0 - e) * T1(t),
        std::sin(x) * e * T1(t);
    return G;
  };
  return s;
}

ForcingSpec generate_forcings(const PhysicalParams& P) {
  const double c = kC;
  ForcingSpec f;
  f.F_b = [P, c](double x, double y, double t) {
    const double sx = std::sin(c * x), cx = std::cos(c * x);
    const double sy = std::sin(c * y), cy = std::cos(c * y);
    const Eigen::Vector2d eta(sx * sy * T1(t), c * cx * cy * T2(t));
    const Eigen::Vector2d lap = -2.0 * c * c * eta;
    const double A = T1(t) - c * T2(t);
    const Eigen::Vector2d grad_div(-c * c * sx * sy * A, c * c * cx * cy * A);
    const Eigen::Vector2d grad_p(-c * c * y * sx * std::cos(y) * T1(t),
                                 c * cx * (std::cos(y) - y * std::sin(y)) * T1(t));
    const Eigen::Vector2d div_sigma =
        P.mu_b * lap + (P.mu_b + P.lambda_b) * grad_div - P.alpha * grad_p;
    const Eigen::Vector2d eta_tt(0.0, c * cx * cy);
    return Eigen::Vector2d(P.rho_b * eta_tt - div_sigma + P.gamma * eta);
  };
  f.G_b = [P, c](double x, double y, double t) {
    const double sx = std::sin(c * x), cx = std::cos(c * x);
    const double p_t = c * y * cx * std::cos(y);
    const double div_xi = c * cx * std::sin(c * y) * (1.0 - c * T1(t));
    const double pxx = -c * c * c * y * cx * std::cos(y) * T1(t);
    const double pyy = c * cx * (-2.0 * std::sin(y) - y * std::cos(y)) * T1(t);
    const double pxy = -c * c * sx * (std::cos(y) - y * std::sin(y)) * T1(t);
    const auto& K = P.kappa;
    const double div_ub = -(K(0, 0) * pxx + (K(0, 1) + K(1, 0)) * pxy + K(1, 1) * pyy);
    return P.c0 * p_t + P.alpha * div_xi + div_ub;
  };
  f.G_p = [P, c](double x, double y, double t) {
    const double cx = std::cos(c * x), sy = std::sin(c * y);
    const double q = cx * sy * T1(t);
    return P.c0_p * cx * sy + P.alpha_p * (y + 0.5 * P.H) * c * c * c * cx * T1(t) +
           P.kappa_p * c * c * q;
  };
  f.F_p = [P, c](double x, double, double t) {
    const double cx = std::cos(c * x), H = P.H;
    return H * P.rho_p * c * cx + H * H * H * P.bendD * std::pow(c, 5) * cx * T2(t) +
           H * P.gamma_p * c * cx * T2(t) -
           H * P.alpha_p * c * c * cx * T1(t) * weighted_sine_average(H) +
           cx * std::sin(c * H) * T1(t);
  };
  f.F_f = [P, c](double x, double y, double t) {
    const double e = std::exp(-(y + 1.0));
    const Eigen::Vector2d u_t(std::cos(x) * e, std::sin(x) * (1.0 - e));
    const Eigen::Vector2d lap(0.0, -std::sin(x) * T1(t));
    const Eigen::Vector2d grad_pi(2.0 * std::cos(x) * std::cos(c * y) * T1(t),
                                  -2.0 * c * std::sin(x) * std::sin(c * y) * T1(t));
    return Eigen::Vector2d(P.rho_f * u_t - P.mu_f * lap + grad_pi);
  };
  return f;
}

BoundaryConditions mms_boundary_conditions(const PhysicalParams& params) {
  const auto s = mms_solution(params);
  const std::vector<FacetTag> outer_b = {FacetTag::GammaB_top, FacetTag::GammaB_side};
  const std::vector<FacetTag> outer_f = {FacetTag::GammaF_bottom, FacetTag::GammaF_side};
  auto comp = [](VectorField f, int i) -> ScalarField {
    return [f, i](double x, double y, double t) { return f(x, y, t)(i); };
  };
  BoundaryConditions bc;
  bc.dirichlet.push_back({BcField::Pressure, 0, outer_b, s.p});
  for (int i = 0; i < 2; ++i) {
    bc.dirichlet.push_back({BcField::Displacement, i, outer_b, comp(s.eta, i)});
    bc.dirichlet.push_back({BcField::FluidVelocity, i, outer_f, comp(s.u, i)});
  }
  return bc;
}

RunConfig mms_run_config(int n, double dt, double t_final) {
  RunConfig cfg;
  cfg.geometry = {1.0, 1.0, 1.0, 1.0};
  cfg.mesh = MeshResolution::uniform(n, n, n, n);
  cfg.dt = dt;
  cfg.t_final = t_final;
  cfg.d_h = 1.0 / n;
  cfg.boundary_case = BoundaryCase::Mms;
  return cfg;
}

StateVector mms_initial_state(const Discretization& d, const PhysicalParams& params, double t) {
  const auto s = mms_solution(params);
  const double y_plus = d.mesh.vertices(1, d.mesh.vertex(d.mesh.row_plus, 0));
  StateVector st;
  st.t = t;
  st.eta = interpolate(d, d.thick, s.eta, t);
  st.xi = interpolate(d, d.thick, s.xi, t);
  st.p = interpolate(d, d.thick, s.p, t);
  st.u_b = interpolate(d, d.thick, s.u_b, t);
  st.w = interpolate_line(d, s.w, y_plus, t);
  st.v = interpolate_line(d, s.v, y_plus, t);
  st.Lam = interpolate_line(d, s.Lam, y_plus, t);
  st.q = interpolate(d, d.plate, s.q, t);
  st.u_p = interpolate(d, d.plate, s.u_p, t);
  st.u = interpolate_p2(d, s.u, t);
  st.pi = interpolate(d, d.fluid, s.pi, t);
  return st;
}

std::array<double, 10> mms_exact_energy_parts(const PhysicalParams& P, double t) {
  const auto s = mms_solution(P);
  const auto g = gauss_legendre<double>(12);
  constexpr int panels = 8;
  std::array<double, 10> e{};
  auto integrate = [&](double y0, double y1, auto&& body) {
    const double hx = 1.0 / panels, hy = (y1 - y0) / panels;
    for (int i = 0; i < panels; ++i)
      for (int j = 0; j < panels; ++j)
        for (int a = 0; a < g.size(); ++a)
          for (int b = 0; b < g.size(); ++b) {
            const double x = (i + g.points(0, a)) * hx;
            const double y = y0 + (j + g.points(0, b)) * hy;
            body(x, y, g.weights(a) * g.weights(b) * hx * hy);
          }
  };
  const double H = P.H;
  integrate(0.0, 1.0, [&](double x, double y, double wq) {
    const Eigen::Vector2d xi = s.xi(x, y, t), eta = s.eta(x, y, t);
    const Eigen::Matrix2d G = s.grad_eta(x, y, t);
    const Eigen::Matrix2d D = 0.5 * (G + G.transpose());
    const double p = s.p(x, y, t);
    e[0] += wq * P.rho_b * xi.squaredNorm();
    e[1] += wq * P.lambda_b * G.trace() * G.trace();
    e[2] += wq * 2.0 * P.mu_b * D.squaredNorm();
    e[3] += wq * P.gamma * eta.squaredNorm();
    e[7] += wq * P.c0 * p * p;
  });
  integrate(-H, 0.0, [&](double x, double y, double wq) {
    const double q = s.q(x, y, t);
    e[8] += wq * P.c0_p * q * q;
  });
  integrate(-H - 1.0, -H, [&](double x, double y, double wq) {
    e[9] += wq * P.rho_f * s.u(x, y, t).squaredNorm();
  });
  for (int i = 0; i < panels; ++i)
    for (int a = 0; a < g.size(); ++a) {
      const double x = (i + g.points(0, a)) / panels, wq = g.weights(a) / panels;
      const double v = s.v(x, 0.0, t), lam = s.Lam(x, 0.0, t), w = s.w(x, 0.0, t);
      e[4] += wq * H * P.rho_p * v * v;
      e[5] += wq * H * H * H * P.bendD * lam * lam;
      e[6] += wq * H * P.gamma_p * w * w;
    }
  return e;
}

double mms_exact_energy(const PhysicalParams& params, double t) {
  double sum = 0.0;
  for (double c : mms_exact_energy_parts(params, t)) sum += c;
  return sum;
}

}  // namespace fpsi
