#include "oracles.hpp"

#include "fpsi/mms.hpp"

#include <Eigen/LU>

#include <algorithm>
#include <cmath>
#include <numbers>

namespace fpsi::testing {

StateVector zero_state(const Discretization& d) {
  const int nb = d.thick.num_dofs(), np = d.plate.num_dofs(), nl = d.line_p1();
  StateVector s;
  s.eta = s.xi = s.u_b = Eigen::Matrix2Xd::Zero(2, nb);
  s.p = Eigen::VectorXd::Zero(nb);
  s.w = s.v = s.Lam = Eigen::VectorXd::Zero(nl);
  s.q = s.u_p = Eigen::VectorXd::Zero(np);
  s.u = Eigen::Matrix2Xd::Zero(2, d.fluid2.num_dofs());
  s.pi = Eigen::VectorXd::Zero(d.fluid.num_dofs());
  return s;
}

namespace {

RunConfig small_config(int nx, int ny_thick, int ny_plate, int ny_fluid, double H) {
  RunConfig cfg;
  cfg.geometry = {1.0, 1.0, H, 1.0};
  cfg.mesh = MeshResolution::uniform(nx, ny_thick, ny_plate, ny_fluid);
  cfg.dt = 0.05;
  cfg.t_final = 0.05;
  cfg.d_h = 1.0 / nx;
  return cfg;
}

/// Piecewise-linear field known at grid nodes, evaluated at the nearest node.
ScalarField nodal_lookup(std::vector<double> ys, Eigen::VectorXd vals) {
  return [ys = std::move(ys), vals = std::move(vals)](double, double y, double) {
    std::size_t best = 0;
    for (std::size_t j = 1; j < ys.size(); ++j)
      if (std::abs(ys[j] - y) < std::abs(ys[best] - y)) best = j;
    return vals(static_cast<Eigen::Index>(best));
  };
}

struct Column1d {
  Eigen::VectorXd P, Fp, Fb;
};

// Mixed P1/P1 difference scheme on nodes y[0..N]; cells below index np are
// plate cells. Flux is double-valued at y[np]. P[N] = 0, natural at y[0].
Column1d solve_column(const std::vector<double>& y, int np, const Eigen::VectorXd& Pn, double dt,
                      double c0p, double kp, double c0, double kb) {
  const int N = static_cast<int>(y.size()) - 1;
  const int iFp = N + 1, iFb = iFp + np + 1, n = iFb + (N - np) + 1;
  Eigen::MatrixXd A = Eigen::MatrixXd::Zero(n, n);
  Eigen::VectorXd b = Eigen::VectorXd::Zero(n);
  for (int k = 0; k < N; ++k) {
    const double h = y[k + 1] - y[k];
    const bool plate = k < np;
    const double c = plate ? c0p : c0, kap = plate ? kp : kb;
    const int f0 = plate ? iFp + k : iFb + (k - np);
    const int nodes[2] = {k, k + 1}, flux[2] = {f0, f0 + 1};
    const double slope[2] = {-1.0, 1.0};
    for (int a = 0; a < 2; ++a) {
      for (int e = 0; e < 2; ++e) {
        const double m = h / 6.0 * (a == e ? 2.0 : 1.0);
        A(nodes[a], nodes[e]) += c / dt * m;
        b(nodes[a]) += c / dt * m * Pn(nodes[e]);
        A(nodes[a], flux[e]) -= slope[a] / 2.0;
        A(flux[a], nodes[e]) += slope[e] / 2.0;
        A(flux[a], flux[e]) += m / kap;
      }
    }
  }
  A.row(N).setZero();
  A(N, N) = 1.0;
  b(N) = 0.0;
  const Eigen::VectorXd x = A.fullPivLu().solve(b);
  return {x.head(N + 1), x.segment(iFp, np + 1), x.segment(iFb, N - np + 1)};
}

}  // namespace

double pressure_column_deviation() {
  const double H = 0.5;
  const RunConfig cfg = small_config(5, 6, 4, 2, H);
  const Discretization d = build_discretization(cfg);
  PhysicalParams P;
  P.c0 = 0.4;
  P.c0_p = 0.6;
  P.kappa << 1.2, 0.0, 0.0, 0.8;
  P.kappa_p = 1.5;
  P.alpha = 0.9;
  P.alpha_p = 0.8;
  P.H = H;

  const auto& m = d.mesh;
  std::vector<double> y;
  for (int r = m.row_minus; r <= m.row_top; ++r) y.push_back(m.vertices(1, m.vertex(r, 0)));
  const int N = static_cast<int>(y.size()) - 1, np = m.row_plus - m.row_minus;
  const double top = y.back();
  Eigen::VectorXd Pn(N + 1);
  for (int j = 0; j <= N; ++j) Pn(j) = std::cos(std::numbers::pi * (y[j] + H) / (2.0 * (top + H)));
  const auto col = solve_column(y, np, Pn, cfg.dt, P.c0_p, P.kappa_p, P.c0, P.kappa(1, 1));

  const std::vector<double> yp(y.begin(), y.begin() + np + 1), yb(y.begin() + np, y.end());
  BoundaryConditions bc;
  const auto p_side = nodal_lookup(y, col.P);
  bc.dirichlet.push_back({BcField::Pressure, 0,
                          {FacetTag::GammaB_top, FacetTag::GammaB_side, FacetTag::GammaP_side},
                          p_side});
  bc.dirichlet.push_back({BcField::DarcyVelocity, 0, {FacetTag::GammaB_side}, {}});
  bc.dirichlet.push_back({BcField::DarcyVelocity, 1, {FacetTag::GammaB_side}, nodal_lookup(yb, col.Fb)});
  bc.dirichlet.push_back({BcField::PlateFlux, 0, {FacetTag::GammaP_side}, nodal_lookup(yp, col.Fp)});

  StateVector prev = zero_state(d);
  auto row_index = [&](int vertex) { return m.row_of(vertex) - m.row_minus; };
  for (int i = 0; i < d.thick.num_dofs(); ++i) prev.p(i) = Pn(row_index(d.thick.vertex(i)));
  for (int i = 0; i < d.plate.num_dofs(); ++i) prev.q(i) = Pn(row_index(d.plate.vertex(i)));

  const PressureStep step(d, P, cfg.dt, cfg.d_h, bc);
  const auto r = step.solve(prev, ForcingSpec{}, cfg.dt);

  double dp = 0.0, df = 0.0;
  for (int i = 0; i < d.thick.num_dofs(); ++i) {
    const int j = row_index(d.thick.vertex(i));
    dp = std::max(dp, std::abs(r.p(i) - col.P(j)));
    df = std::max({df, std::abs(r.u_b(0, i)), std::abs(r.u_b(1, i) - col.Fb(j - np))});
  }
  for (int i = 0; i < d.plate.num_dofs(); ++i) {
    const int j = row_index(d.plate.vertex(i));
    dp = std::max(dp, std::abs(r.q(i) - col.P(j)));
    df = std::max(df, std::abs(r.u_p(i) - col.Fp(j)));
  }
  const double fscale = std::max(col.Fp.cwiseAbs().maxCoeff(), col.Fb.cwiseAbs().maxCoeff());
  return std::max(dp / col.P.cwiseAbs().maxCoeff(), df / fscale);
}

double uniform_strain_deviation() {
  const RunConfig cfg = small_config(4, 5, 3, 2, 1.0);
  const Discretization d = build_discretization(cfg);
  PhysicalParams P;
  P.rho_b = 1.3;
  P.mu_b = 0.7;
  P.lambda_b = 2.1;
  P.gamma = 0.0;
  P.rho_p = 1.1;
  P.bendD = 0.9;
  P.gamma_p = 0.3;
  P.gamma_pen = 2.0;
  const double eps = 0.3, s_yy = (P.lambda_b + 2.0 * P.mu_b) * eps;

  BoundaryConditions bc;
  bc.dirichlet.push_back({BcField::Displacement, 0, {FacetTag::GammaB_side}, {}});
  bc.structure_traction.push_back(
      {{FacetTag::GammaB_top}, [s_yy](double, double, double) { return Eigen::Vector2d(0.0, s_yy); }});
  ForcingSpec f;
  f.F_p = [s_yy](double, double, double) { return -s_yy; };

  StateVector prev = zero_state(d);
  const VectorField eta = [eps](double, double y, double) { return Eigen::Vector2d(0.0, eps * y); };
  prev.eta = interpolate(d, d.thick, eta, 0.0);
  prev.w = trace_plus(d, prev.eta.row(1).transpose());

  const StructureStep step(d, P, cfg.dt, cfg.d_h, bc);
  const auto r = step.solve(prev, prev.p, prev.q, prev.u_p, f, cfg.dt);
  const double scale = prev.eta.cwiseAbs().maxCoeff();
  return ((r.eta - prev.eta).cwiseAbs().maxCoeff() + r.xi.cwiseAbs().maxCoeff() +
          r.v.cwiseAbs().maxCoeff() + r.Lam.cwiseAbs().maxCoeff()) /
         scale;
}

double poiseuille_deviation() {
  const RunConfig cfg = small_config(4, 2, 2, 3, 1.0);
  const Discretization d = build_discretization(cfg);
  PhysicalParams P;
  P.rho_f = 1.2;
  P.mu_f = 0.6;
  P.beta = 0.5;
  P.gamma_pen = 3.0;
  const double G = 0.5, pi0 = 0.7, mu = P.mu_f;
  const double y_top = -cfg.geometry.plate_thickness;
  // U'' = -G / mu, mu U'(top) = -beta U(top), U(top) = 1
  auto U = [=](double y) {
    const double s = y - y_top;
    return -G / (2.0 * mu) * s * s - P.beta / mu * s + 1.0;
  };
  auto dU = [=](double y) { return -G / mu * (y - y_top) - P.beta / mu; };
  auto pi = [=](double x) { return pi0 - G * x; };
  const double L = cfg.geometry.length;

  BoundaryConditions bc;
  const ScalarField ux = [U](double, double y, double) { return U(y); };
  bc.dirichlet.push_back({BcField::FluidVelocity, 0, {FacetTag::GammaF_bottom}, ux});
  bc.dirichlet.push_back({BcField::FluidVelocity, 1, {FacetTag::GammaF_bottom}, {}});
  bc.fluid_traction.push_back({{FacetTag::GammaF_side}, [=](double x, double y, double) {
                                 const double sgn = x < 0.5 * L ? -1.0 : 1.0;
                                 return Eigen::Vector2d(-sgn * pi(x), sgn * mu * dU(y));
                               }});

  StateVector prev = zero_state(d);
  const VectorField u = [U](double, double y, double) { return Eigen::Vector2d(U(y), 0.0); };
  prev.u = interpolate_p2(d, u, 0.0);
  StokesInterfaceData iface;
  iface.q_minus.resize(d.line_p1());
  for (int c = 0; c < d.line_p1(); ++c) iface.q_minus(c) = pi(d.mesh.xgrid[c]);
  iface.v = iface.u_p = Eigen::VectorXd::Zero(d.line_p1());

  const StokesStep step(d, P, cfg.dt, cfg.d_h, bc);
  const auto r = step.solve(prev, iface, ForcingSpec{}, cfg.dt);
  double dpi = 0.0, spi = 0.0;
  for (int i = 0; i < d.fluid.num_dofs(); ++i) {
    const double x = d.mesh.vertices(0, d.fluid.vertex(i));
    dpi = std::max(dpi, std::abs(r.pi(i) - pi(x)));
    spi = std::max(spi, std::abs(pi(x)));
  }
  const double du = (r.u - prev.u).cwiseAbs().maxCoeff() / prev.u.cwiseAbs().maxCoeff();
  return std::max(du, dpi / spi);
}

}  // namespace fpsi::testing
