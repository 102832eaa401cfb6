#include "fpsi/step_structure.hpp"

#include "fpsi/assembly.hpp"

#include <map>

namespace fpsi {

StructureStep::StructureStep(const Discretization& d, const PhysicalParams& params, double dt,
                             double d_h, const BoundaryConditions& bc)
    : d_(d), params_(params), dt_(dt), pen_(params.gamma_pen * params.mu_f / d_h), bc_(bc) {
  auto& L = layout_;
  L.n_thick = d.thick.num_dofs();
  L.n_line = d.line_p1();
  cq_ = build_column_quadrature(d);
  const auto& P = params;
  const double H = P.H;

  auto vdofs = [&](int k) { return vector_cell_dofs(band_cell_dofs(d, d.thick, k), L.n_thick); };
  auto sdofs = [&](int k) { return band_cell_dofs(d, d.thick, k); };
  const Eigen::Matrix2d I2 = Eigen::Matrix2d::Identity();

  TripletList tm, te, tb;
  add_cells(tm, d, d.tris_b, vdofs, vdofs, 0, 0, [&](const auto& g) { return p1_vector_mass(g, I2); });
  add_cells(te, d, d.tris_b, vdofs, vdofs, 0, 0, [&](const auto& g) {
    return (P.lambda_b * p1_div_div(g) + 2.0 * P.mu_b * p1_sym_grad(g) +
            P.gamma * p1_vector_mass(g, I2))
        .eval();
  });
  add_cells(tb, d, d.tris_b, vdofs, sdofs, 0, 0, [&](const auto& g) {
    Eigen::Matrix<double, 6, 3> B;
    const auto div = p1_divergence_row(g);
    for (int j = 0; j < 3; ++j) B.col(j) = div * (g.area / 3.0);
    return B;
  });
  mass_ = assemble(2 * L.n_thick, 2 * L.n_thick, tm);
  elastic_ = assemble(2 * L.n_thick, 2 * L.n_thick, te);
  pdiv_ = assemble(2 * L.n_thick, L.n_thick, tb);

  TripletList t;
  auto add_sparse = [&](const SparseMatrix& A, double s) {
    for (int k = 0; k < A.outerSize(); ++k)
      for (SparseMatrix::InnerIterator it(A, k); it; ++it)
        t.add(static_cast<int>(it.row()), static_cast<int>(it.col()), s * it.value());
  };
  add_sparse(mass_, P.rho_b / dt);
  add_sparse(elastic_, dt);

  auto v_dof = [&](int c) { return L.xi(1, d.thick_plus(c)); };
  auto lam_dof = [&](int c) { return L.lam(c); };
  const double bend = H * H * H * P.bendD;
  add_line_matrix(t, d.M11, H * P.rho_p / dt + H * P.gamma_p * dt + pen_, v_dof, v_dof);
  add_line_matrix(t, d.K11, bend, v_dof, lam_dof);
  add_line_matrix(t, d.M11, bend / dt, lam_dof, lam_dof);
  add_line_matrix(t, d.K11, -bend, lam_dof, v_dof);

  std::map<int, bool> cons;
  for (int c = 0; c < d.line_p1(); ++c) cons[L.xi(0, d.thick_plus(c))] = true;
  bc_eta_ = resolve_dirichlet(d, bc_, BcField::Displacement);
  for (std::size_t k = 0; k < bc_eta_.dofs.size(); ++k)
    cons[L.xi(bc_eta_.components[k], bc_eta_.dofs[k])] = true;
  for (const auto& [i, _] : cons) constrained_.push_back(i);

  solver_ = std::make_unique<ConstrainedSolver>("structure step",
                                                assemble(L.size(), L.size(), t), constrained_);
}

Eigen::VectorXd StructureStep::dirichlet_values(const StateVector& prev, double t_next) const {
  const auto& L = layout_;
  const auto& X = d_.mesh.vertices;
  Eigen::VectorXd g = Eigen::VectorXd::Zero(L.size());
  for (std::size_t k = 0; k < bc_eta_.dofs.size(); ++k) {
    const int dof = bc_eta_.dofs[k], comp = bc_eta_.components[k];
    const int v = d_.thick.vertex(dof);
    const double target = evaluate_or_zero(bc_eta_.source[k]->value, X(0, v), X(1, v), t_next);
    g(L.xi(comp, dof)) = (target - prev.eta(comp, dof)) / dt_;
  }
  return g;
}

Eigen::VectorXd StructureStep::rhs(const StateVector& prev, const Eigen::VectorXd& p_new,
                                   const Eigen::VectorXd& q_new, const Eigen::VectorXd& u_p_new,
                                   const ForcingSpec& forcing, double t_next) const {
  const auto& L = layout_;
  const auto& P = params_;
  const double H = P.H;
  const int nb = L.n_thick;
  Eigen::VectorXd b = Eigen::VectorXd::Zero(L.size());

  Eigen::VectorXd xi_n(2 * nb), eta_n(2 * nb);
  xi_n << prev.xi.row(0).transpose(), prev.xi.row(1).transpose();
  eta_n << prev.eta.row(0).transpose(), prev.eta.row(1).transpose();
  b.head(2 * nb) = (P.rho_b / dt_) * (mass_ * xi_n) - elastic_ * eta_n + P.alpha * (pdiv_ * p_new);

  if (forcing.F_b) {
    const auto quad = dunavant4<double>();
    for (int k : d_.tris_b) {
      const auto g = triangle_geometry<double>(d_.triangle_coords(k));
      const auto dofs = band_cell_dofs(d_, d_.thick, k);
      for (int q = 0; q < quad.size(); ++q) {
        const auto N = p1_values(quad.points(0, q), quad.points(1, q));
        const auto x = g.map(quad.points(0, q), quad.points(1, q));
        const Eigen::Vector2d f = forcing.F_b(x(0), x(1), t_next);
        for (int i = 0; i < 3; ++i) {
          b(L.xi(0, dofs[i])) += quad.weights(q) * g.area * f(0) * N(i);
          b(L.xi(1, dofs[i])) += quad.weights(q) * g.area * f(1) * N(i);
        }
      }
    }
  }

  const auto sq = segment_rule<double>(7);
  for (const auto& tc : bc_.structure_traction) {
    for (const auto& f : d_.mesh.facets) {
      if (f.subdomain != Subdomain::B) continue;
      if (std::find(tc.tags.begin(), tc.tags.end(), f.tag) == tc.tags.end()) continue;
      const Eigen::Vector2d a = d_.mesh.vertices.col(f.v[0]), e = d_.mesh.vertices.col(f.v[1]);
      const double len = (e - a).norm();
      for (int q = 0; q < sq.size(); ++q) {
        const double s = sq.points(0, q);
        const Eigen::Vector2d x = a + s * (e - a);
        const Eigen::Vector2d tr = tc.traction(x(0), x(1), t_next);
        const auto N = segment_p1_values(s);
        for (int i = 0; i < 2; ++i) {
          const int dof = d_.thick.dof(f.v[i]);
          b(L.xi(0, dof)) += sq.weights(q) * len * tr(0) * N(i);
          b(L.xi(1, dof)) += sq.weights(q) * len * tr(1) * N(i);
        }
      }
    }
  }

  // plate rows
  const Eigen::VectorXd zq_avg = column_average(cq_, q_new, true);
  const Eigen::VectorXd q_minus = transfer_minus_to_plus(d_.imap, trace_plate_minus(d_, q_new));
  const Eigen::VectorXd up_minus =
      transfer_minus_to_plus(d_.imap, trace_plate_minus(d_, u_p_new));
  const Eigen::VectorXd uy_minus = trace_fluid2_minus(d_, prev.u.row(1).transpose());
  Eigen::VectorXd plate = (H * P.rho_p / dt_) * (d_.M11 * prev.v) -
                          (H * P.gamma_p) * (d_.M11 * prev.w) +
                          (H * P.alpha_p) * (d_.K11 * zq_avg) + d_.M11 * q_minus +
                          pen_ * (d_.M12 * uy_minus - d_.M11 * up_minus);
  if (forcing.F_p) {
    const double y = d_.mesh.vertices(1, d_.mesh.vertex(d_.mesh.row_plus, 0));
    for (int c = 0; c < d_.nx(); ++c) {
      const double x0 = d_.mesh.xgrid[c], x1 = d_.mesh.xgrid[c + 1];
      for (int q = 0; q < sq.size(); ++q) {
        const double s = sq.points(0, q);
        const double f = forcing.F_p(x0 + s * (x1 - x0), y, t_next);
        plate(c) += sq.weights(q) * (x1 - x0) * f * (1.0 - s);
        plate(c + 1) += sq.weights(q) * (x1 - x0) * f * s;
      }
    }
  }
  const double bend = H * H * H * P.bendD;
  const Eigen::VectorXd lam = (bend / dt_) * (d_.M11 * prev.Lam);
  for (int c = 0; c < d_.line_p1(); ++c) {
    b(L.xi(1, d_.thick_plus(c))) += plate(c);
    b(L.lam(c)) += lam(c);
  }
  return b;
}

StructureResult StructureStep::solve(const StateVector& prev, const Eigen::VectorXd& p_new,
                                     const Eigen::VectorXd& q_new, const Eigen::VectorXd& u_p_new,
                                     const ForcingSpec& forcing, double t_next) const {
  const auto& L = layout_;
  StructureResult r;
  r.x = solver_->solve(rhs(prev, p_new, q_new, u_p_new, forcing, t_next),
                       dirichlet_values(prev, t_next));
  r.xi.resize(2, L.n_thick);
  r.xi.row(0) = r.x.head(L.n_thick).transpose();
  r.xi.row(1) = r.x.segment(L.n_thick, L.n_thick).transpose();
  r.eta = prev.eta + dt_ * r.xi;
  r.Lam = r.x.tail(L.n_line);
  r.v = trace_plus(d_, r.xi.row(1).transpose());
  r.w = trace_plus(d_, r.eta.row(1).transpose());
  return r;
}

StructureResult solve_structure(const Discretization& d, const StateVector& prev,
                                const Eigen::VectorXd& p_new, const Eigen::VectorXd& q_new,
                                const Eigen::VectorXd& u_p_new, const PhysicalParams& params,
                                const RunConfig& cfg, const BoundaryConditions& bc,
                                const ForcingSpec& forcing, double t_next) {
  return StructureStep(d, params, cfg.dt, cfg.d_h, bc)
      .solve(prev, p_new, q_new, u_p_new, forcing, t_next);
}

}  // namespace fpsi
