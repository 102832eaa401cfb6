#include "fpsi/mms.hpp"
#include "fpsi/stability.hpp"

#include <gtest/gtest.h>

#include <limits>

using namespace fpsi;

TEST(Bounds, IsolatedAllUnit) {
  const StabilityConstants c;
  EXPECT_NEAR(dt_bound_thm54(PhysicalParams::unit(), c), 1.0 / 24.0, 1e-15);
}

TEST(Bounds, IsolatedWithoutCoupling) {
  auto p = PhysicalParams::unit();
  p.alpha = p.alpha_p = 0.0;
  EXPECT_NEAR(dt_bound_thm54(p, StabilityConstants{}), 1.0 / 16.0, 1e-15);
}

TEST(Bounds, IsolatedShrinksWithH) {
  auto c = StabilityConstants{};
  c.h = 0.1;
  c.H = 0.01;  // plate terms large, so the h^2 term is active
  const auto p = PhysicalParams::unit();
  const double b1 = dt_bound_thm54(p, c);
  c.h = 0.05;
  EXPECT_LE(dt_bound_thm54(p, c), b1 / 4.0 * (1 + 1e-12));
}

TEST(Bounds, ConditionedAllUnit) {
  EXPECT_NEAR(dt_bound_thm55_value(PhysicalParams::unit(), StabilityConstants{}), 0.25, 1e-15);
  // unit parameters fail the thick-layer condition
  EXPECT_FALSE(dt_bound_thm55(PhysicalParams::unit(), StabilityConstants{}).has_value());
}

TEST(Bounds, ConditionedVanishesWithKappaP) {
  auto p = PhysicalParams::vessel(0.05);
  StabilityConstants c;
  c.h = c.H = 0.05;
  p.kappa_p = 1e-14;
  const auto b = dt_bound_thm55(p, c);
  ASSERT_TRUE(b.has_value());
  EXPECT_LT(*b, 1e-14);
}

TEST(Bounds, ConstantsValidated) {
  StabilityConstants c;
  c.C_TR = 0.0;
  EXPECT_THROW(validate_constants(c), ConfigError);
}

TEST(DiagonalDominance, Examples) {
  EXPECT_TRUE(lemma53_condition(Eigen::Matrix3d::Identity()));
  Eigen::Matrix2d a;
  a << 1, 0.9, 0.9, 1;
  EXPECT_TRUE(lemma53_condition(a));
  Eigen::Matrix3d b = Eigen::Matrix3d::Identity();
  b(0, 1) = b(1, 0) = std::sqrt(0.3);
  EXPECT_FALSE(lemma53_condition(b));
  Eigen::Matrix2d ns;
  ns << 1, 0.1, 0.2, 1;
  EXPECT_THROW(lemma53_condition(ns), std::invalid_argument);
}

TEST(Eigen, GeneralizedEstimates) {
  // A = diag(1, 4, 9), B = I
  SparseMatrix A(3, 3), B(3, 3);
  for (int i = 0; i < 3; ++i) {
    A.insert(i, i) = (i + 1.0) * (i + 1.0);
    B.insert(i, i) = 1.0;
  }
  EXPECT_NEAR(max_generalized_eigenvalue(A, B), 9.0, 1e-6);
  EXPECT_NEAR(min_generalized_eigenvalue(A, B), 1.0, 1e-8);
}

TEST(Constants, EstimatedOnSmallMesh) {
  const auto d = build_discretization(mms_run_config(8, 1e-3, 0.1));
  const auto k = estimate_constants(d, PhysicalParams::unit());
  EXPECT_NO_THROW(validate_constants(k));
  EXPECT_NEAR(k.h, 1.0 / 8.0, 1e-15);
  // 1D inverse inequality on a uniform P1 line: |d_x v| <= sqrt(12) / h |v|
  EXPECT_LE(k.B_INV, std::sqrt(12.0) + 1e-6);
  EXPECT_GT(k.B_INV, 2.0);
}
