#include "fpsi/step_pressure.hpp"

#include "fpsi/assembly.hpp"

namespace fpsi {

PressureStep::PressureStep(const Discretization& d, const PhysicalParams& params, double dt,
                           double d_h, const BoundaryConditions& bc)
    : d_(d), params_(params), dt_(dt), pen_(params.gamma_pen * params.mu_f / d_h), bc_(bc) {
  auto& L = layout_;
  L.n_pressure = d.pressure.num_dofs();
  L.n_thick = d.thick.num_dofs();
  L.n_plate = d.plate.num_dofs();
  L.thick_shift = d.mesh.ny_plate * (d.nx() + 1);

  const Eigen::Matrix2d kinv = params.kappa.inverse();
  auto thick_p = [&](int k) {
    auto s = band_cell_dofs(d, d.thick, k);
    for (auto& i : s) i += L.thick_shift;
    return s;
  };
  auto thick_v = [&](int k) { return vector_cell_dofs(band_cell_dofs(d, d.thick, k), L.n_thick); };
  auto plate_s = [&](int k) { return band_cell_dofs(d, d.plate, k); };

  TripletList t;
  // thick layer
  add_cells(t, d, d.tris_b, thick_p, thick_p, 0, 0,
            [&](const auto& g) { return (params.c0 / dt * p1_mass(g)).eval(); });
  add_cells(t, d, d.tris_b, thick_p, thick_v, 0, L.ubx(), [&](const auto& g) {
    return (-p1_grad_coupling(g).transpose()).eval();
  });
  add_cells(t, d, d.tris_b, thick_v, thick_p, L.ubx(), 0,
            [&](const auto& g) { return p1_grad_coupling(g); });
  add_cells(t, d, d.tris_b, thick_v, thick_v, L.ubx(), L.ubx(),
            [&](const auto& g) { return p1_vector_mass(g, kinv); });
  // plate
  add_cells(t, d, d.tris_p, plate_s, plate_s, 0, 0,
            [&](const auto& g) { return (params.c0_p / dt * p1_mass(g)).eval(); });
  add_cells(t, d, d.tris_p, plate_s, plate_s, 0, L.up(), [&](const auto& g) {
    return (-p1_normal_derivative(g).transpose()).eval();
  });
  add_cells(t, d, d.tris_p, plate_s, plate_s, L.up(), 0,
            [&](const auto& g) { return p1_normal_derivative(g); });
  add_cells(t, d, d.tris_p, plate_s, plate_s, L.up(), L.up(),
            [&](const auto& g) { return (p1_mass(g) / params.kappa_p).eval(); });
  // interface penalty on u_p at Gamma_-
  auto up_minus = [&](int c) { return L.up() + d.plate_minus(c); };
  add_line_matrix(t, d.M11, pen_, up_minus, up_minus);

  bc_p_ = resolve_dirichlet(d, bc_, BcField::Pressure);
  bc_ub_ = resolve_dirichlet(d, bc_, BcField::DarcyVelocity);
  bc_up_ = resolve_dirichlet(d, bc_, BcField::PlateFlux);
  for (int i : bc_p_.dofs) constrained_.push_back(i);
  for (std::size_t k = 0; k < bc_ub_.dofs.size(); ++k)
    constrained_.push_back(L.ubx() + bc_ub_.components[k] * L.n_thick + bc_ub_.dofs[k]);
  for (int i : bc_up_.dofs) constrained_.push_back(L.up() + i);

  solver_ = std::make_unique<ConstrainedSolver>("pressure step", assemble(L.size(), L.size(), t),
                                                constrained_);

  TripletList mb, mp;
  add_cells(mb, d, d.tris_b, [&](int k) { return band_cell_dofs(d, d.thick, k); },
            [&](int k) { return band_cell_dofs(d, d.thick, k); }, 0, 0,
            [](const auto& g) { return p1_mass(g); });
  add_cells(mp, d, d.tris_p, plate_s, plate_s, 0, 0, [](const auto& g) { return p1_mass(g); });
  mass_b_ = assemble(L.n_thick, L.n_thick, mb);
  mass_p_ = assemble(L.n_plate, L.n_plate, mp);
}

Eigen::VectorXd PressureStep::dirichlet_values(double t_next) const {
  const auto& L = layout_;
  const auto& X = d_.mesh.vertices;
  Eigen::VectorXd g = Eigen::VectorXd::Zero(L.size());
  for (std::size_t k = 0; k < bc_p_.dofs.size(); ++k) {
    const int v = d_.pressure.vertex(bc_p_.dofs[k]);
    g(bc_p_.dofs[k]) = evaluate_or_zero(bc_p_.source[k]->value, X(0, v), X(1, v), t_next);
  }
  for (std::size_t k = 0; k < bc_ub_.dofs.size(); ++k) {
    const int v = d_.thick.vertex(bc_ub_.dofs[k]);
    g(L.ubx() + bc_ub_.components[k] * L.n_thick + bc_ub_.dofs[k]) =
        evaluate_or_zero(bc_ub_.source[k]->value, X(0, v), X(1, v), t_next);
  }
  for (std::size_t k = 0; k < bc_up_.dofs.size(); ++k) {
    const int v = d_.plate.vertex(bc_up_.dofs[k]);
    g(L.up() + bc_up_.dofs[k]) =
        evaluate_or_zero(bc_up_.source[k]->value, X(0, v), X(1, v), t_next);
  }
  return g;
}

Eigen::VectorXd PressureStep::rhs(const StateVector& prev, const ForcingSpec& forcing,
                                  double t_next) const {
  const auto& L = layout_;
  const auto& P = params_;
  const double H = P.H;
  Eigen::VectorXd b = Eigen::VectorXd::Zero(L.size());

  b.segment(L.thick_shift, L.n_thick) += (P.c0 / dt_) * (mass_b_ * prev.p);
  b.head(L.n_plate) += (P.c0_p / dt_) * (mass_p_ * prev.q);

  const auto quad = dunavant4<double>();
  for (int k : d_.tris_b) {
    const auto g = triangle_geometry<double>(d_.triangle_coords(k));
    const auto dofs = band_cell_dofs(d_, d_.thick, k);
    double div = 0.0;
    for (int i = 0; i < 3; ++i) div += prev.xi.col(dofs[i]).dot(g.grads.row(i).transpose());
    Eigen::Vector3d loc = Eigen::Vector3d::Constant(-P.alpha * div * g.area / 3.0);
    if (forcing.G_b) {
      for (int q = 0; q < quad.size(); ++q) {
        const auto x = g.map(quad.points(0, q), quad.points(1, q));
        loc += quad.weights(q) * g.area * forcing.G_b(x(0), x(1), t_next) *
               p1_values(quad.points(0, q), quad.points(1, q));
      }
    }
    for (int i = 0; i < 3; ++i) b(L.thick_shift + dofs[i]) += loc(i);
  }

  const Eigen::VectorXd v_ext = extend(d_, prev.v);
  for (int k : d_.tris_p) {
    const auto g = triangle_geometry<double>(d_.triangle_coords(k));
    const auto dofs = band_cell_dofs(d_, d_.plate, k);
    double dxv = 0.0;
    for (int i = 0; i < 3; ++i) dxv += v_ext(dofs[i]) * g.grads(i, 0);
    const double zbar = g.X.row(1).mean() + 0.5 * H;
    Eigen::Vector3d loc = -P.alpha_p * dxv * g.area * zbar * g.grads.col(0);
    if (forcing.G_p) {
      for (int q = 0; q < quad.size(); ++q) {
        const auto x = g.map(quad.points(0, q), quad.points(1, q));
        loc += quad.weights(q) * g.area * forcing.G_p(x(0), x(1), t_next) *
               p1_values(quad.points(0, q), quad.points(1, q));
      }
    }
    for (int i = 0; i < 3; ++i) b(dofs[i]) += loc(i);
  }

  // Gamma_- flux data u^n . n - v^n and its penalty counterpart
  const Eigen::VectorXd uy_line = trace_fluid2_minus(d_, prev.u.row(1).transpose());
  const Eigen::VectorXd v_minus = transfer_plus_to_minus(d_.imap, prev.v);
  const Eigen::VectorXd flux = d_.M12 * uy_line - d_.M11 * v_minus;
  for (int c = 0; c < d_.line_p1(); ++c) {
    b(d_.plate_minus(c)) += flux(c);
    b(L.up() + d_.plate_minus(c)) += pen_ * flux(c);
  }
  return b;
}

PressureResult PressureStep::solve(const StateVector& prev, const ForcingSpec& forcing,
                                   double t_next) const {
  const auto& L = layout_;
  PressureResult r;
  r.x = solver_->solve(rhs(prev, forcing, t_next), dirichlet_values(t_next));
  r.p = r.x.segment(L.thick_shift, L.n_thick);
  r.q = r.x.head(L.n_plate);
  r.u_b.resize(2, L.n_thick);
  r.u_b.row(0) = r.x.segment(L.ubx(), L.n_thick).transpose();
  r.u_b.row(1) = r.x.segment(L.uby(), L.n_thick).transpose();
  r.u_p = r.x.segment(L.up(), L.n_plate);
  return r;
}

PressureResult solve_pressure(const Discretization& d, const StateVector& prev,
                              const PhysicalParams& params, const RunConfig& cfg,
                              const BoundaryConditions& bc, const ForcingSpec& forcing,
                              double t_next) {
  return PressureStep(d, params, cfg.dt, cfg.d_h, bc).solve(prev, forcing, t_next);
}

}  // namespace fpsi
