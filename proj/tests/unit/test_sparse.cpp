#include "fpsi/sparse.hpp"
#include "fpsi/assembly.hpp"
#include "fpsi/mms.hpp"

#include <gtest/gtest.h>

using namespace fpsi;

TEST(Assemble, SumsDuplicates) {
  TripletList t;
  t.add(0, 0, 1.0);
  t.add(0, 0, 2.0);
  const auto A = assemble(2, 2, t);
  EXPECT_DOUBLE_EQ(A.coeff(0, 0), 3.0);
  EXPECT_EQ(A.nonZeros(), 1);
}

TEST(Assemble, OrderIndependent) {
  TripletList a, b;
  const double v[] = {0.1, 1e16, -1e16, 0.3};
  for (int i = 0; i < 4; ++i) a.add(1, 1, v[i]);
  for (int i = 3; i >= 0; --i) b.add(1, 1, v[i]);
  EXPECT_EQ(assemble(2, 2, a).coeff(1, 1), assemble(2, 2, b).coeff(1, 1));
}

TEST(Assemble, OutOfRangeThrows) {
  TripletList t;
  t.add(2, 0, 1.0);
  EXPECT_THROW(assemble(2, 2, t), std::out_of_range);
}

TEST(Assemble, UnitSquareMass) {
  const auto d = build_discretization(mms_run_config(2, 1e-3, 0.1));
  TripletList t;
  auto dofs = [&](int k) { return band_cell_dofs(d, d.thick, k); };
  add_cells(t, d, d.tris_b, dofs, dofs, 0, 0, [](const auto& g) { return p1_mass(g); });
  const auto M = assemble(d.thick.num_dofs(), d.thick.num_dofs(), t);
  EXPECT_NEAR(Eigen::MatrixXd(M).sum(), 1.0, 1e-14);
}

TEST(Solve, Identity) {
  SparseSystem s;
  s.A.resize(3, 3);
  s.A.setIdentity();
  s.rhs = Eigen::Vector3d(1, 2, 3);
  EXPECT_NEAR((solve(s) - s.rhs).norm(), 0.0, 1e-15);
}

TEST(Solve, OneDimensionalPoisson) {
  // -x'' = 1 on (0, 1), x(0) = x(1) = 0; linear elements are nodally exact
  const int n = 10;
  const double h = 1.0 / n;
  TripletList t;
  SparseSystem s;
  s.rhs = Eigen::VectorXd::Constant(n + 1, h);
  for (int e = 0; e < n; ++e) {
    t.add(e, e, 1 / h);
    t.add(e + 1, e + 1, 1 / h);
    t.add(e, e + 1, -1 / h);
    t.add(e + 1, e, -1 / h);
  }
  s.A = assemble(n + 1, n + 1, t);
  s.constrained = {0, n};
  s.values = Eigen::Vector2d::Zero();
  apply_constraints(s);
  const auto x = solve(s);
  for (int i = 0; i <= n; ++i) EXPECT_NEAR(x(i), i * h * (1 - i * h) / 2, 1e-13);
}

TEST(Solve, ConstrainedSolverReusesFactor) {
  TripletList t;
  for (int i = 0; i < 4; ++i) t.add(i, i, 2.0);
  for (int i = 0; i < 3; ++i) {
    t.add(i, i + 1, -1.0);
    t.add(i + 1, i, -1.0);
  }
  const auto A = assemble(4, 4, t);
  const ConstrainedSolver cs("chain", A, {0});
  Eigen::VectorXd g = Eigen::VectorXd::Zero(4);
  for (double val : {1.0, -2.0}) {
    g(0) = val;
    const Eigen::VectorXd rhs = Eigen::VectorXd::Ones(4);
    const auto x = cs.solve(rhs, g);
    EXPECT_DOUBLE_EQ(x(0), val);
    const Eigen::VectorXd r = A * x - rhs;
    EXPECT_LT(r.tail(3).norm(), 1e-12);
  }
}

TEST(Solve, SingularThrowsSolverError) {
  SparseSystem s;
  s.name = "singular";
  TripletList t;
  t.add(0, 0, 1.0);
  t.add(0, 1, 1.0);
  t.add(1, 0, 1.0);
  t.add(1, 1, 1.0);
  s.A = assemble(2, 2, t);
  s.rhs = Eigen::Vector2d(1, 0);
  try {
    solve(s);
    FAIL() << "expected SolverError";
  } catch (const SolverError& e) {
    EXPECT_EQ(e.system(), "singular");
  }
}
