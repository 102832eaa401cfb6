#include "fpsi/core_model.hpp"

#include <gtest/gtest.h>

using namespace fpsi;

TEST(Params, VesselSetIsValid) { EXPECT_TRUE(validate_params(PhysicalParams::vessel(0.05)).empty()); }

TEST(Params, UnitSetIsValid) {
  const auto p = PhysicalParams::unit();
  EXPECT_EQ(p.gamma, 0.0);
  EXPECT_EQ(p.gamma_p, 0.0);
  EXPECT_EQ(p.gamma_pen, 0.0);
  EXPECT_TRUE(validate_params(p).empty());
}

TEST(Params, IndefiniteKappaNamed) {
  auto p = PhysicalParams::unit();
  p.kappa << 1.0, 0.0, 0.0, -0.5;
  const auto v = validate_params(p);
  ASSERT_EQ(v.size(), 1u);
  EXPECT_EQ(v[0].field, "kappa");
}

TEST(Params, NegativeDensityNamed) {
  auto p = PhysicalParams::unit();
  p.rho_f = -1.0;
  const auto v = validate_params(p);
  ASSERT_EQ(v.size(), 1u);
  EXPECT_EQ(v[0].field, "rho_f");
}

TEST(Params, KMin) {
  auto p = PhysicalParams::unit();
  p.kappa << 2.0, 1.0, 1.0, 2.0;
  EXPECT_NEAR(p.k_min(), 1.0, 1e-14);
}

TEST(Conditions, VesselSetPassesBoth) {
  const auto p = PhysicalParams::vessel(0.05);
  // alpha^2 = 1 against c0 lambda_b = 1700 and 12 c0_p D ~ 7.16e3
  EXPECT_NEAR(p.c0 * p.lambda_b, 1700.0, 1e-9);
  EXPECT_NEAR(12.0 * p.c0_p * p.bendD, 7.16e3, 5.0);
  const auto c = check_parameter_conditions(p);
  EXPECT_TRUE(c.thick);
  EXPECT_TRUE(c.plate);
}

TEST(Conditions, UnitSetThickFailsStrictInequality) {
  // 1 < 1 fails for the thick layer; the plate side compares 1 < 12
  const auto c = check_parameter_conditions(PhysicalParams::unit());
  EXPECT_FALSE(c.thick);
  EXPECT_TRUE(c.plate);
}

TEST(Conditions, ZeroCouplingPasses) {
  auto p = PhysicalParams::unit();
  p.alpha = p.alpha_p = 0.0;
  const auto c = check_parameter_conditions(p);
  EXPECT_TRUE(c.thick);
  EXPECT_TRUE(c.plate);
}

TEST(Params, BendingStiffness) {
  EXPECT_NEAR(plate_bending_stiffness(5.58e5, 1.7e6), 596573.8636363636, 1e-6);
}

TEST(RunConfigTest, Validation) {
  RunConfig c;
  EXPECT_NO_THROW(validate_run_config(c));
  c.dt = 0.0;
  EXPECT_THROW(validate_run_config(c), ConfigError);
  c = RunConfig{};
  c.t_final = 0.5 * c.dt;
  EXPECT_THROW(validate_run_config(c), ConfigError);
  c = RunConfig{};
  c.mesh.nx_plate = 11;
  EXPECT_THROW(validate_run_config(c), ConfigError);
}

TEST(RunConfigTest, BoundaryCaseNames) {
  EXPECT_EQ(boundary_case_from_string(to_string(BoundaryCase::Vessel)), BoundaryCase::Vessel);
  EXPECT_THROW(boundary_case_from_string("pipe"), ConfigError);
}
