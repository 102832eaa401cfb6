#include "fpsi/verification.hpp"

#include "fpsi/assembly.hpp"
#include "fpsi/coupling.hpp"
#include "fpsi/mms.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <ostream>
#include <random>
#include <thread>

namespace fpsi {

const std::array<const char*, 8>& mms_error_names() {
  static const std::array<const char*, 8> n = {"e_p", "e_q", "e_eta", "e_xi",
                                               "e_w", "e_v", "e_u",   "e_pi"};
  return n;
}

MmsErrors mms_errors(const Discretization& d, const StateVector& s, const PhysicalParams& params) {
  const auto ex = mms_solution(params);
  const double t = s.t;
  return {l2_error(d, FieldSpace::ThickP1, s.p, ex.p, t),
          l2_error(d, FieldSpace::PlateP1, s.q, ex.q, t),
          l2_error(d, FieldSpace::ThickP1, s.eta, ex.eta, t),
          l2_error(d, FieldSpace::ThickP1, s.xi, ex.xi, t),
          l2_error(d, FieldSpace::LineP1, s.w, ex.w, t),
          l2_error(d, FieldSpace::LineP1, s.v, ex.v, t),
          l2_error(d, FieldSpace::FluidP2, s.u, ex.u, t),
          l2_error(d, FieldSpace::FluidP1, s.pi, ex.pi, t)};
}

MmsRun run_mms(const RunConfig& cfg, const PhysicalParams& params, bool track_energy) {
  auto d = std::make_shared<const Discretization>(build_discretization(cfg));
  const Scheme scheme(d, params, cfg, mms_boundary_conditions(params), generate_forcings(params));
  MmsRun run;
  StateVector s = mms_initial_state(*d, params, 0.0);
  auto record = [&] {
    if (!track_energy) return;
    run.energy.push_back(scheme.energy(s));
    run.exact_energy.push_back(mms_exact_energy(params, s.t));
  };
  record();
  const int steps = cfg.num_steps();
  for (int n = 0; n < steps; ++n) {
    s = scheme.advance(s);
    // keep the time stamp on the grid t_n = n dt
    s.t = (n + 1) * cfg.dt;
    record();
  }
  run.errors = mms_errors(*d, s, params);
  return run;
}

MmsErrors fit_slopes(const std::vector<double>& resolution, const std::vector<MmsErrors>& errors) {
  MmsErrors slopes{};
  const std::size_t n = resolution.size();
  if (n < 2 || errors.size() != n) throw std::invalid_argument("need at least two levels");
  double mx = 0.0;
  for (double r : resolution) mx += std::log(r);
  mx /= static_cast<double>(n);
  for (std::size_t v = 0; v < slopes.size(); ++v) {
    double my = 0.0;
    for (const auto& e : errors) my += std::log(e[v]);
    my /= static_cast<double>(n);
    double sxy = 0.0, sxx = 0.0;
    for (std::size_t k = 0; k < n; ++k) {
      const double dx = std::log(resolution[k]) - mx;
      sxy += dx * (std::log(errors[k][v]) - my);
      sxx += dx * dx;
    }
    slopes[v] = sxy / sxx;
  }
  return slopes;
}

void run_parallel(int count, int jobs, const std::function<void(int)>& task) {
  jobs = std::max(1, std::min(jobs, count));
  if (jobs == 1) {
    for (int i = 0; i < count; ++i) task(i);
    return;
  }
  std::atomic<int> next{0};
  std::vector<std::exception_ptr> errors(count);
  std::vector<std::thread> pool;
  for (int j = 0; j < jobs; ++j)
    pool.emplace_back([&] {
      for (int i = next++; i < count; i = next++) {
        try {
          task(i);
        } catch (...) {
          errors[i] = std::current_exception();
        }
      }
    });
  for (auto& th : pool) th.join();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
}

ConvergenceTable convergence_space(const std::vector<int>& levels, double dt, double t_final,
                                   const PhysicalParams& params, int jobs) {
  if (levels.size() < 3) throw ConfigError("convergence study needs at least three levels");
  if (!std::is_sorted(levels.begin(), levels.end()) ||
      std::adjacent_find(levels.begin(), levels.end()) != levels.end())
    throw ConfigError("levels must be strictly increasing");
  ConvergenceTable tab;
  tab.parameter = "h";
  tab.errors.resize(levels.size());
  for (int n : levels) tab.resolution.push_back(1.0 / n);
  run_parallel(static_cast<int>(levels.size()), jobs, [&](int i) {
    tab.errors[i] = run_mms(mms_run_config(levels[i], dt, t_final), params).errors;
  });
  tab.slopes = fit_slopes(tab.resolution, tab.errors);
  return tab;
}

ConvergenceTable convergence_time(const std::vector<double>& dts, int n, double t_final,
                                  const PhysicalParams& params, int jobs) {
  if (dts.size() < 3) throw ConfigError("convergence study needs at least three levels");
  ConvergenceTable tab;
  tab.parameter = "dt";
  tab.resolution = dts;
  tab.errors.resize(dts.size());
  run_parallel(static_cast<int>(dts.size()), jobs, [&](int i) {
    tab.errors[i] = run_mms(mms_run_config(n, dts[i], t_final), params).errors;
  });
  tab.slopes = fit_slopes(tab.resolution, tab.errors);
  return tab;
}

void write_convergence_csv(std::ostream& os, const ConvergenceTable& table) {
  char buf[32];
  auto put = [&](double v) {
    std::snprintf(buf, sizeof buf, "%.8e", v);
    os << buf;
  };
  os << table.parameter;
  for (const char* n : mms_error_names()) os << ',' << n;
  os << '\n';
  for (std::size_t k = 0; k < table.resolution.size(); ++k) {
    put(table.resolution[k]);
    for (double e : table.errors[k]) {
      os << ',';
      put(e);
    }
    os << '\n';
  }
  os << "slope";
  for (double s : table.slopes) {
    os << ',';
    put(s);
  }
  os << '\n';
}

double EnergySeries::relative_deviation(std::size_t k) const {
  return std::abs(numeric[k] - exact[k]) / std::abs(exact[k]);
}

double EnergySeries::max_relative_deviation() const {
  double m = 0.0;
  for (std::size_t k = 0; k < t.size(); ++k) m = std::max(m, relative_deviation(k));
  return m;
}

EnergySeries long_term_energy(int n, double dt, double t_final, const PhysicalParams& params) {
  const auto run = run_mms(mms_run_config(n, dt, t_final), params, true);
  EnergySeries s;
  for (std::size_t k = 0; k < run.energy.size(); ++k) {
    s.t.push_back(run.energy[k].t);
    s.numeric.push_back(run.energy[k].total());
    s.exact.push_back(run.exact_energy[k]);
  }
  return s;
}

std::pair<double, double> check_thm51(const Discretization& d, const Eigen::VectorXd& p,
                                      const Eigen::VectorXd& q, double H) {
  const int np = d.plate.num_dofs();
  auto sp = [&](int k) { return band_cell_dofs(d, d.plate, k); };
  TripletList tk;
  const Eigen::Matrix2d ez = (Eigen::Matrix2d() << 0.0, 0.0, 0.0, 1.0).finished();
  add_cells(tk, d, d.tris_p, sp, sp, 0, 0, [&](const auto& g) { return p1_stiffness(g, ez); });
  const SparseMatrix Kz = assemble(np, np, tk);
  const double dzq = q.dot(Kz * q);

  const Eigen::VectorXd qm = trace_plate_minus(d, q);
  const Eigen::VectorXd pp = trace_plus(d, p);
  const double trace_slack = 2.0 * pp.dot(d.M11 * pp) + 2.0 * H * dzq - qm.dot(d.M11 * qm);

  const Eigen::VectorXd avg = column_average(build_column_quadrature(d), q, true);
  const double avg_slack = H * H * H / 64.0 * dzq - avg.dot(d.M11 * avg);
  return {trace_slack, avg_slack};
}

StateVector random_admissible_state(const Scheme& scheme, std::uint64_t seed) {
  const auto& d = scheme.discretization();
  const auto& bc = scheme.boundary_conditions();
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> U(-1.0, 1.0);
  auto fill = [&](auto& m) {
    for (Eigen::Index i = 0; i < m.size(); ++i) m.data()[i] = U(rng);
  };
  StateVector s = scheme.zero_state();
  fill(s.eta);
  fill(s.xi);
  fill(s.p);
  fill(s.u_b);
  fill(s.Lam);
  fill(s.q);
  fill(s.u_p);
  fill(s.u);
  fill(s.pi);

  const auto rp = resolve_dirichlet(d, bc, BcField::Pressure);
  for (int dof : rp.dofs) {
    const int v = d.pressure.vertex(dof);
    if (d.thick.dof(v) >= 0) s.p(d.thick.dof(v)) = 0.0;
    if (d.plate.dof(v) >= 0) s.q(d.plate.dof(v)) = 0.0;
  }
  const auto re = resolve_dirichlet(d, bc, BcField::Displacement);
  for (std::size_t k = 0; k < re.dofs.size(); ++k) {
    s.eta(re.components[k], re.dofs[k]) = 0.0;
    s.xi(re.components[k], re.dofs[k]) = 0.0;
  }
  const auto ru = resolve_dirichlet(d, bc, BcField::FluidVelocity);
  for (std::size_t k = 0; k < ru.dofs.size(); ++k) s.u(ru.components[k], ru.dofs[k]) = 0.0;
  const auto rb = resolve_dirichlet(d, bc, BcField::DarcyVelocity);
  for (std::size_t k = 0; k < rb.dofs.size(); ++k) s.u_b(rb.components[k], rb.dofs[k]) = 0.0;
  const auto rf = resolve_dirichlet(d, bc, BcField::PlateFlux);
  for (int dof : rf.dofs) s.u_p(dof) = 0.0;

  for (int c = 0; c < d.line_p1(); ++c) {
    const int b = d.thick_plus(c);
    s.eta(0, b) = 0.0;
    s.xi(0, b) = 0.0;
    s.q(d.plate_plus(c)) = s.p(b);
  }
  s.w = trace_plus(d, s.eta.row(1).transpose());
  s.v = trace_plus(d, s.xi.row(1).transpose());
  s.t = 0.0;
  return s;
}

double max_energy_increase(const Scheme& scheme, std::uint64_t seed, int steps) {
  StateVector s = random_admissible_state(scheme, seed);
  const double e0 = scheme.energy(s).total();
  double prev = e0, worst = -std::numeric_limits<double>::infinity();
  for (int n = 0; n < steps; ++n) {
    s = scheme.advance(s);
    const double e = scheme.energy(s).total();
    worst = std::max(worst, (e - prev) / e0);
    prev = e;
  }
  return worst;
}

}  // namespace fpsi
