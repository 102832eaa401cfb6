#include "fpsi/scheme.hpp"

#include "fpsi/assembly.hpp"

#include <cmath>
#include <cstdio>
#include <ostream>

namespace fpsi {

double EnergyReport::total() const {
  double s = 0.0;
  for (double e : E) s += e;
  return s;
}

double EnergyReport::dissipation() const {
  double s = 0.0;
  for (double e : Dsp) s += e;
  return s;
}

const std::array<const char*, 10>& EnergyReport::energy_names() {
  static const std::array<const char*, 10> n = {
      "rho_b_xi", "lambda_b_div_eta", "mu_b_D_eta", "gamma_eta", "rho_p_v",
      "bendD_Lam", "gamma_p_w",       "c0_p",       "c0p_q",    "rho_f_u"};
  return n;
}

const std::array<const char*, 4>& EnergyReport::dissipation_names() {
  static const std::array<const char*, 4> n = {"darcy_b", "darcy_p", "mu_f_D_u", "beta_slip"};
  return n;
}

Scheme::Scheme(std::shared_ptr<const Discretization> d, const PhysicalParams& params,
               const RunConfig& cfg, const BoundaryConditions& bc, ForcingSpec forcing)
    : d_(std::move(d)),
      params_(params),
      cfg_(cfg),
      bc_(bc),
      forcing_(std::move(forcing)),
      pressure_(*d_, params, cfg.dt, cfg.d_h, bc),
      structure_(*d_, params, cfg.dt, cfg.d_h, bc),
      stokes_(*d_, params, cfg.dt, cfg.d_h, bc) {
  const auto& D = *d_;
  const int nb = D.thick.num_dofs();
  auto sb = [&](int k) { return band_cell_dofs(D, D.thick, k); };
  auto vb = [&](int k) { return vector_cell_dofs(sb(k), nb); };
  auto sp = [&](int k) { return band_cell_dofs(D, D.plate, k); };
  const Eigen::Matrix2d kinv = params.kappa.inverse();

  TripletList mb, mp, dd, sg, da;
  add_cells(mb, D, D.tris_b, sb, sb, 0, 0, [](const auto& g) { return p1_mass(g); });
  add_cells(mp, D, D.tris_p, sp, sp, 0, 0, [](const auto& g) { return p1_mass(g); });
  add_cells(dd, D, D.tris_b, vb, vb, 0, 0, [](const auto& g) { return p1_div_div(g); });
  add_cells(sg, D, D.tris_b, vb, vb, 0, 0, [](const auto& g) { return p1_sym_grad(g); });
  add_cells(da, D, D.tris_b, vb, vb, 0, 0, [&](const auto& g) { return p1_vector_mass(g, kinv); });
  mass_b_ = assemble(nb, nb, mb);
  mass_p_ = assemble(D.plate.num_dofs(), D.plate.num_dofs(), mp);
  divdiv_b_ = assemble(2 * nb, 2 * nb, dd);
  symgrad_b_ = assemble(2 * nb, 2 * nb, sg);
  darcy_b_ = assemble(2 * nb, 2 * nb, da);
}

StateVector Scheme::zero_state() const {
  const auto& D = *d_;
  const int nb = D.thick.num_dofs(), np = D.plate.num_dofs(), nl = D.line_p1();
  StateVector s;
  s.eta = Eigen::Matrix2Xd::Zero(2, nb);
  s.xi = Eigen::Matrix2Xd::Zero(2, nb);
  s.p = Eigen::VectorXd::Zero(nb);
  s.u_b = Eigen::Matrix2Xd::Zero(2, nb);
  s.w = Eigen::VectorXd::Zero(nl);
  s.v = Eigen::VectorXd::Zero(nl);
  s.Lam = Eigen::VectorXd::Zero(nl);
  s.q = Eigen::VectorXd::Zero(np);
  s.u_p = Eigen::VectorXd::Zero(np);
  s.u = Eigen::Matrix2Xd::Zero(2, D.fluid2.num_dofs());
  s.pi = Eigen::VectorXd::Zero(D.fluid.num_dofs());
  return s;
}

StateVector Scheme::advance(const StateVector& prev) const {
  const auto& D = *d_;
  const double t_next = prev.t + cfg_.dt;
  try {
    const auto pr = pressure_.solve(prev, forcing_, t_next);
    const auto sr = structure_.solve(prev, pr.p, pr.q, pr.u_p, forcing_, t_next);
    StokesInterfaceData iface;
    iface.q_minus = transfer_minus_to_plus(D.imap, trace_plate_minus(D, pr.q));
    iface.v = sr.v;
    iface.u_p = transfer_minus_to_plus(D.imap, trace_plate_minus(D, pr.u_p));
    const auto fr = stokes_.solve(prev, iface, forcing_, t_next);

    StateVector s;
    s.t = t_next;
    s.p = pr.p;
    s.u_b = pr.u_b;
    s.q = pr.q;
    s.u_p = pr.u_p;
    s.xi = sr.xi;
    s.eta = sr.eta;
    s.v = sr.v;
    s.w = sr.w;
    s.Lam = sr.Lam;
    s.u = fr.u;
    s.pi = fr.pi;
    return s;
  } catch (const StepError&) {
    throw;
  } catch (const SolverError& e) {
    throw StepError(static_cast<int>(std::lround(t_next / cfg_.dt)), e);
  }
}

namespace {

double quad(const SparseMatrix& A, const Eigen::VectorXd& x) { return x.dot(A * x); }

Eigen::VectorXd stack(const Eigen::Matrix2Xd& m) {
  Eigen::VectorXd out(2 * m.cols());
  out << m.row(0).transpose(), m.row(1).transpose();
  return out;
}

}  // namespace

EnergyReport Scheme::energy(const StateVector& s) const {
  const auto& D = *d_;
  const auto& P = params_;
  const double H = P.H;
  const Eigen::VectorXd eta = stack(s.eta), xi = stack(s.xi), u = stack(s.u);
  EnergyReport r;
  r.t = s.t;
  r.E[0] = P.rho_b * quad(structure_.vector_mass(), xi);
  r.E[1] = P.lambda_b * quad(divdiv_b_, eta);
  r.E[2] = 2.0 * P.mu_b * quad(symgrad_b_, eta);
  r.E[3] = P.gamma * quad(structure_.vector_mass(), eta);
  r.E[4] = H * P.rho_p * quad(D.M11, s.v);
  r.E[5] = H * H * H * P.bendD * quad(D.M11, s.Lam);
  r.E[6] = H * P.gamma_p * quad(D.M11, s.w);
  r.E[7] = P.c0 * quad(mass_b_, s.p);
  r.E[8] = P.c0_p * quad(mass_p_, s.q);
  r.E[9] = P.rho_f * (quad(stokes_.mass(), s.u.row(0).transpose()) +
                      quad(stokes_.mass(), s.u.row(1).transpose()));
  r.Dsp[0] = quad(darcy_b_, stack(s.u_b));
  r.Dsp[1] = quad(mass_p_, s.u_p) / P.kappa_p;
  r.Dsp[2] = 2.0 * P.mu_f * quad(stokes_.viscous(), u);
  r.Dsp[3] = P.beta * quad(D.M22, trace_fluid2_minus(D, s.u.row(0).transpose()));
  return r;
}

void write_energy_header(std::ostream& os) {
  os << "t,E";
  for (const char* n : EnergyReport::energy_names()) os << ',' << n;
  os << ",Dsp";
  for (const char* n : EnergyReport::dissipation_names()) os << ',' << n;
  os << '\n';
}

void write_energy_row(std::ostream& os, const EnergyReport& r) {
  char buf[32];
  auto put = [&](double v) {
    std::snprintf(buf, sizeof buf, "%.8e", v);
    os << buf;
  };
  put(r.t);
  os << ',';
  put(r.total());
  for (double e : r.E) {
    os << ',';
    put(e);
  }
  os << ',';
  put(r.dissipation());
  for (double e : r.Dsp) {
    os << ',';
    put(e);
  }
  os << '\n';
}

}  // namespace fpsi
