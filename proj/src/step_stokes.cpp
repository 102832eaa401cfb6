#include "fpsi/step_stokes.hpp"

#include "fpsi/assembly.hpp"

#include <map>

namespace fpsi {

StokesStep::StokesStep(const Discretization& d, const PhysicalParams& params, double dt,
                       double d_h, const BoundaryConditions& bc)
    : d_(d), params_(params), dt_(dt), pen_(params.gamma_pen * params.mu_f / d_h), bc_(bc) {
  auto& L = layout_;
  L.n_u = d.fluid2.num_dofs();
  L.n_pi = d.fluid.num_dofs();
  const auto& P = params;

  auto s2 = [&](int k) { return d.fluid2.cell_dofs[d.fluid_tri_local[k]]; };
  auto v2 = [&](int k) { return vector_cell_dofs(s2(k), L.n_u); };
  auto s1 = [&](int k) { return band_cell_dofs(d, d.fluid, k); };

  TripletList tm, tk;
  add_cells(tm, d, d.tris_f, s2, s2, 0, 0, [](const auto& g) { return p2_mass(g); });
  add_cells(tk, d, d.tris_f, v2, v2, 0, 0, [](const auto& g) { return p2_sym_grad(g); });
  mass_ = assemble(L.n_u, L.n_u, tm);
  visc_ = assemble(2 * L.n_u, 2 * L.n_u, tk);

  TripletList t;
  for (int k = 0; k < mass_.outerSize(); ++k)
    for (SparseMatrix::InnerIterator it(mass_, k); it; ++it)
      for (int c = 0; c < 2; ++c)
        t.add(L.u(c, static_cast<int>(it.row())), L.u(c, static_cast<int>(it.col())),
              P.rho_f / dt * it.value());
  for (int k = 0; k < visc_.outerSize(); ++k)
    for (SparseMatrix::InnerIterator it(visc_, k); it; ++it)
      t.add(static_cast<int>(it.row()), static_cast<int>(it.col()), 2.0 * P.mu_f * it.value());
  add_cells(t, d, d.tris_f, v2, s1, 0, L.pi(0),
            [](const auto& g) { return (-p2_p1_divergence(g).transpose()).eval(); });
  add_cells(t, d, d.tris_f, s1, v2, L.pi(0), 0, [](const auto& g) { return p2_p1_divergence(g); });

  auto ux = [&](int j) { return L.u(0, d.fluid2_minus(j)); };
  auto uy = [&](int j) { return L.u(1, d.fluid2_minus(j)); };
  add_line_matrix(t, d.M22, P.beta, ux, ux);
  add_line_matrix(t, d.M22, pen_, uy, uy);

  bc_u_ = resolve_dirichlet(d, bc_, BcField::FluidVelocity);
  std::map<int, bool> cons;
  for (std::size_t k = 0; k < bc_u_.dofs.size(); ++k)
    cons[L.u(bc_u_.components[k], bc_u_.dofs[k])] = true;
  for (const auto& [i, _] : cons) constrained_.push_back(i);

  solver_ = std::make_unique<ConstrainedSolver>("stokes step", assemble(L.size(), L.size(), t),
                                                constrained_);
}

Eigen::VectorXd StokesStep::dirichlet_values(double t_next) const {
  Eigen::VectorXd g = Eigen::VectorXd::Zero(layout_.size());
  const auto& X = d_.fluid2.nodes;
  for (std::size_t k = 0; k < bc_u_.dofs.size(); ++k) {
    const int n = bc_u_.dofs[k];
    g(layout_.u(bc_u_.components[k], n)) =
        evaluate_or_zero(bc_u_.source[k]->value, X(0, n), X(1, n), t_next);
  }
  return g;
}

Eigen::VectorXd StokesStep::rhs(const StateVector& prev, const StokesInterfaceData& iface,
                                const ForcingSpec& forcing, double t_next) const {
  const auto& L = layout_;
  const auto& P = params_;
  Eigen::VectorXd b = Eigen::VectorXd::Zero(L.size());
  for (int c = 0; c < 2; ++c)
    b.segment(L.u(c, 0), L.n_u) = (P.rho_f / dt_) * (mass_ * prev.u.row(c).transpose());

  if (forcing.F_f) {
    const auto quad = triangle_rule<double>(6);
    for (int k : d_.tris_f) {
      const auto g = triangle_geometry<double>(d_.triangle_coords(k));
      const auto& dofs = d_.fluid2.cell_dofs[d_.fluid_tri_local[k]];
      for (int q = 0; q < quad.size(); ++q) {
        const auto N = p2_values(quad.points(0, q), quad.points(1, q));
        const auto x = g.map(quad.points(0, q), quad.points(1, q));
        const Eigen::Vector2d f = forcing.F_f(x(0), x(1), t_next);
        for (int i = 0; i < 6; ++i)
          for (int c = 0; c < 2; ++c) b(L.u(c, dofs[i])) += quad.weights(q) * g.area * f(c) * N(i);
      }
    }
  }

  // Gamma_- normal stress and penalty data on u_y
  const Eigen::VectorXd line =
      -(d_.M12.transpose() * iface.q_minus) + pen_ * (d_.M12.transpose() * (iface.v + iface.u_p));
  for (int j = 0; j < d_.line_p2(); ++j) b(L.u(1, d_.fluid2_minus(j))) += line(j);

  const auto sq = segment_rule<double>(7);
  const int W = 2 * d_.nx() + 1;
  for (const auto& tc : bc_.fluid_traction) {
    for (const auto& f : d_.mesh.facets) {
      if (f.subdomain != Subdomain::F) continue;
      if (std::find(tc.tags.begin(), tc.tags.end(), f.tag) == tc.tags.end()) continue;
      const int ra = d_.mesh.row_of(f.v[0]), ca = d_.mesh.col_of(f.v[0]);
      const int rb = d_.mesh.row_of(f.v[1]), cb = d_.mesh.col_of(f.v[1]);
      const std::array<int, 3> nodes = {2 * ra * W + 2 * ca, (ra + rb) * W + (ca + cb),
                                        2 * rb * W + 2 * cb};
      const Eigen::Vector2d a = d_.mesh.vertices.col(f.v[0]), e = d_.mesh.vertices.col(f.v[1]);
      const double len = (e - a).norm();
      for (int q = 0; q < sq.size(); ++q) {
        const double s = sq.points(0, q);
        const Eigen::Vector2d x = a + s * (e - a);
        const Eigen::Vector2d tr = tc.traction(x(0), x(1), t_next);
        const auto N = segment_p2_values(s);
        for (int i = 0; i < 3; ++i)
          for (int c = 0; c < 2; ++c) b(L.u(c, nodes[i])) += sq.weights(q) * len * tr(c) * N(i);
      }
    }
  }
  return b;
}

StokesResult StokesStep::solve(const StateVector& prev, const StokesInterfaceData& iface,
                               const ForcingSpec& forcing, double t_next) const {
  const auto& L = layout_;
  StokesResult r;
  r.x = solver_->solve(rhs(prev, iface, forcing, t_next), dirichlet_values(t_next));
  r.u.resize(2, L.n_u);
  r.u.row(0) = r.x.head(L.n_u).transpose();
  r.u.row(1) = r.x.segment(L.n_u, L.n_u).transpose();
  r.pi = r.x.tail(L.n_pi);
  return r;
}

StokesResult solve_stokes(const Discretization& d, const StateVector& prev,
                          const StokesInterfaceData& iface, const PhysicalParams& params,
                          const RunConfig& cfg, const BoundaryConditions& bc,
                          const ForcingSpec& forcing, double t_next) {
  return StokesStep(d, params, cfg.dt, cfg.d_h, bc).solve(prev, iface, forcing, t_next);
}

}  // namespace fpsi
