#include "fpsi/mms.hpp"
#include "oracles.hpp"

#include <gtest/gtest.h>

using namespace fpsi;
using fpsi::testing::zero_state;

class StepsOnMms : public ::testing::Test {
 protected:
  void SetUp() override {
    cfg = mms_run_config(6, 1e-2, 1e-2);
    d = build_discretization(cfg);
    bc = homogeneous_boundary_conditions(BoundaryCase::Mms);
  }
  RunConfig cfg;
  Discretization d;
  PhysicalParams P = PhysicalParams::unit();
  BoundaryConditions bc;
};

TEST_F(StepsOnMms, ZeroDataGivesZero) {
  const auto s0 = zero_state(d);
  const PressureStep ps(d, P, cfg.dt, cfg.d_h, bc);
  const auto pr = ps.solve(s0, ForcingSpec{}, cfg.dt);
  EXPECT_EQ(pr.x.cwiseAbs().maxCoeff(), 0.0);

  const StructureStep ss(d, P, cfg.dt, cfg.d_h, bc);
  const auto sr = ss.solve(s0, pr.p, pr.q, pr.u_p, ForcingSpec{}, cfg.dt);
  EXPECT_EQ(sr.x.cwiseAbs().maxCoeff(), 0.0);
  EXPECT_EQ(sr.eta, s0.eta);

  const StokesStep st(d, P, cfg.dt, cfg.d_h, bc);
  StokesInterfaceData iface{Eigen::VectorXd::Zero(d.line_p1()), Eigen::VectorXd::Zero(d.line_p1()),
                            Eigen::VectorXd::Zero(d.line_p1())};
  EXPECT_EQ(st.solve(s0, iface, ForcingSpec{}, cfg.dt).x.cwiseAbs().maxCoeff(), 0.0);
}

TEST_F(StepsOnMms, LayoutSizes) {
  const PressureStep ps(d, P, cfg.dt, cfg.d_h, bc);
  const auto& L = ps.layout();
  EXPECT_EQ(L.n_pressure, d.pressure.num_dofs());
  EXPECT_EQ(L.size(), d.pressure.num_dofs() + 2 * d.thick.num_dofs() + d.plate.num_dofs());
  EXPECT_EQ(ps.matrix().rows(), L.size());
  const StructureStep ss(d, P, cfg.dt, cfg.d_h, bc);
  EXPECT_EQ(ss.layout().size(), 2 * d.thick.num_dofs() + d.line_p1());
  const StokesStep st(d, P, cfg.dt, cfg.d_h, bc);
  EXPECT_EQ(st.layout().size(), 2 * d.fluid2.num_dofs() + d.fluid.num_dofs());
}

TEST_F(StepsOnMms, DarcyConsistency) {
  // (kappa^-1 u_b + grad p, U_b) = 0 for interior test functions
  StateVector s0 = mms_initial_state(d, P, 0.0);
  const PressureStep ps(d, P, cfg.dt, cfg.d_h, mms_boundary_conditions(P));
  const auto r = ps.solve(s0, generate_forcings(P), cfg.dt);
  const Eigen::VectorXd res = ps.matrix() * r.x - ps.rhs(s0, generate_forcings(P), cfg.dt);
  const auto& L = ps.layout();
  const auto fixed = resolve_dirichlet(d, mms_boundary_conditions(P), BcField::DarcyVelocity);
  std::vector<char> skip(L.size(), 0);
  for (std::size_t k = 0; k < fixed.dofs.size(); ++k)
    skip[(fixed.components[k] == 0 ? L.ubx() : L.uby()) + fixed.dofs[k]] = 1;
  double worst = 0.0;
  for (int i = L.ubx(); i < L.up(); ++i)
    if (!skip[i]) worst = std::max(worst, std::abs(res(i)));
  EXPECT_LT(worst, 1e-9 * std::max(1.0, r.x.cwiseAbs().maxCoeff()));
}

TEST_F(StepsOnMms, StokesIncompressibility) {
  StateVector s0 = mms_initial_state(d, P, 0.0);
  const StokesStep st(d, P, cfg.dt, cfg.d_h, mms_boundary_conditions(P));
  StokesInterfaceData iface{trace_plate_minus(d, s0.q), s0.v, trace_plate_minus(d, s0.u_p)};
  const auto r = st.solve(s0, iface, generate_forcings(P), cfg.dt);
  const auto& L = st.layout();
  const Eigen::VectorXd div = st.matrix().bottomRows(L.n_pi) * r.x;
  EXPECT_LT(div.cwiseAbs().maxCoeff(), 1e-9 * std::max(1.0, r.x.cwiseAbs().maxCoeff()));
}

TEST_F(StepsOnMms, DecoupledStructureStaysAtRest) {
  auto Q = P;
  Q.alpha = Q.alpha_p = 0.0;
  auto s0 = zero_state(d);
  s0.p.setConstant(1.0);
  s0.q.setConstant(1.0);
  const StructureStep ss(d, Q, cfg.dt, cfg.d_h, bc);
  const auto r = ss.solve(s0, s0.p, Eigen::VectorXd::Zero(d.plate.num_dofs()),
                          Eigen::VectorXd::Zero(d.plate.num_dofs()), ForcingSpec{}, cfg.dt);
  EXPECT_EQ(r.xi.cwiseAbs().maxCoeff(), 0.0);
}

TEST(StepOracles, PressureColumn) { EXPECT_LE(fpsi::testing::pressure_column_deviation(), 1e-8); }

TEST(StepOracles, UniformStrain) { EXPECT_LE(fpsi::testing::uniform_strain_deviation(), 1e-8); }

TEST(StepOracles, Poiseuille) { EXPECT_LE(fpsi::testing::poiseuille_deviation(), 1e-8); }
