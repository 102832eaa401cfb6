#include "fpsi/mms.hpp"
#include "fpsi/verification.hpp"

#include <gtest/gtest.h>

#include <sstream>

using namespace fpsi;

namespace {

Scheme isolated_scheme(int n, double dt, const PhysicalParams& P = PhysicalParams::unit()) {
  const auto cfg = mms_run_config(n, dt, dt);
  auto d = std::make_shared<const Discretization>(build_discretization(cfg));
  return Scheme(d, P, cfg, homogeneous_boundary_conditions(BoundaryCase::Mms), ForcingSpec{});
}

}  // namespace

TEST(Scheme, ZeroStateStaysZero) {
  const auto s = isolated_scheme(4, 1e-2);
  const auto z = s.zero_state();
  const auto e = s.energy(z);
  EXPECT_EQ(e.total(), 0.0);
  EXPECT_EQ(e.dissipation(), 0.0);
  const auto n = s.advance(z);
  EXPECT_EQ(n.p.cwiseAbs().maxCoeff(), 0.0);
  EXPECT_EQ(n.eta.cwiseAbs().maxCoeff(), 0.0);
  EXPECT_EQ(n.u.cwiseAbs().maxCoeff(), 0.0);
  EXPECT_NEAR(n.t, 1e-2, 1e-15);
}

TEST(Scheme, ConstantFluidVelocityEnergy) {
  auto P = PhysicalParams::unit();
  P.rho_f = 2.0;
  const auto s = isolated_scheme(4, 1e-2, P);
  auto z = s.zero_state();
  z.u.row(0).setConstant(3.0);
  const auto e = s.energy(z);
  EXPECT_NEAR(e.E[9], 2.0 * 9.0 * 1.0, 1e-12);
  EXPECT_NEAR(e.total(), e.E[9], 1e-12);
}

TEST(Scheme, SharedTracesAfterStep) {
  const auto s = isolated_scheme(4, 1e-2);
  const auto& d = s.discretization();
  auto x = random_admissible_state(s, 7);
  for (int k = 0; k < 3; ++k) {
    x = s.advance(x);
    EXPECT_NEAR((trace_plus(d, x.p) - trace_plate_plus(d, x.q)).cwiseAbs().maxCoeff(), 0.0, 1e-14);
    EXPECT_NEAR((trace_plus(d, x.eta.row(1).transpose()) - x.w).cwiseAbs().maxCoeff(), 0.0, 1e-14);
    EXPECT_NEAR((trace_plus(d, x.xi.row(1).transpose()) - x.v).cwiseAbs().maxCoeff(), 0.0, 1e-14);
    EXPECT_EQ(trace_plus(d, x.xi.row(0).transpose()).cwiseAbs().maxCoeff(), 0.0);
  }
}

TEST(Scheme, IsolatedEnergyDecays) {
  const auto s = isolated_scheme(6, 1e-4);
  for (std::uint64_t seed : {1u, 2u, 3u}) EXPECT_LE(max_energy_increase(s, seed, 20), 1e-12);
}

TEST(Scheme, EnergyCsv) {
  std::ostringstream os;
  write_energy_header(os);
  EnergyReport r;
  r.t = 0.5;
  r.E[0] = 1.0;
  write_energy_row(os, r);
  const auto text = os.str();
  EXPECT_EQ(text.substr(0, 2), "t,");
  EXPECT_NE(text.find("\n5.00000000e-01,"), std::string::npos);
  EXPECT_EQ(EnergyReport::energy_names().size(), 10u);
}
