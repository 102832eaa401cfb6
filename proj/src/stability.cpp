#include "fpsi/stability.hpp"

#include "fpsi/assembly.hpp"
#include "fpsi/boundary.hpp"

#include <Eigen/SparseCholesky>

#include <algorithm>
#include <cmath>
#include <limits>

namespace fpsi {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

double safe_div(double num, double den) { return den == 0.0 ? kInf : num / den; }

double mass_factor(const PhysicalParams& p, const StabilityConstants& c) {
  return std::min(p.rho_b / (c.C_TI * c.C_TI), p.rho_f / (c.A_TI * c.A_TI));
}

Eigen::VectorXd start_vector(int n) {
  // deterministic, not orthogonal to smooth or oscillatory modes
  Eigen::VectorXd x(n);
  for (int i = 0; i < n; ++i) x(i) = 1.0 + 0.5 * std::sin(1.0 + 7.3 * i) + 0.25 * std::cos(0.37 * i);
  return x;
}

// Submatrix on the indices with keep_index >= 0, renumbered by keep_index.
SparseMatrix restrict_matrix(const SparseMatrix& A, const std::vector<int>& keep_index, int n) {
  TripletList t;
  for (int k = 0; k < A.outerSize(); ++k)
    for (SparseMatrix::InnerIterator it(A, k); it; ++it) {
      const int i = keep_index[it.row()], j = keep_index[it.col()];
      if (i >= 0 && j >= 0) t.add(i, j, it.value());
    }
  return assemble(n, n, t);
}

}  // namespace

void validate_constants(const StabilityConstants& c) {
  for (double v : {c.C_P, c.C_TR, c.C_INV, c.B_INV, c.C_TI, c.A_TI, c.h, c.H})
    if (!(v > 0.0)) throw ConfigError("stability constants must be positive");
}

double dt_bound_thm54(const PhysicalParams& p, const StabilityConstants& c) {
  const double h = c.h, r = c.h / c.H;
  const double M = mass_factor(p, c);
  const double t1 = safe_div(p.rho_b * p.k_min() * h * h,
                             24.0 * p.alpha * p.alpha * c.C_INV * c.C_INV * c.C_P * c.C_P);
  const double t2 = safe_div(128.0 * p.rho_p * p.kappa_p * std::pow(r, 4),
                             3.0 * p.alpha_p * p.alpha_p * std::pow(c.B_INV, 4));
  const double t3 = safe_div(M * p.k_min() * h, 16.0 * c.C_TR * c.C_TR);
  const double t4 = M * p.kappa_p * r / 6.0;
  return std::min({t1, t2, t3, t4});
}

double dt_bound_thm55_value(const PhysicalParams& p, const StabilityConstants& c) {
  const double M = mass_factor(p, c);
  return 0.25 * M * std::min(p.k_min() * c.h / (c.C_TR * c.C_TR), p.kappa_p * c.h / c.H);
}

std::optional<double> dt_bound_thm55(const PhysicalParams& p, const StabilityConstants& c) {
  const auto pc = check_parameter_conditions(p);
  if (!pc.thick || !pc.plate) return std::nullopt;
  return dt_bound_thm55_value(p, c);
}

bool lemma53_condition(const Eigen::MatrixXd& A) {
  if (A.rows() != A.cols()) throw std::invalid_argument("matrix is not square");
  const auto n = A.rows();
  for (Eigen::Index i = 0; i < n; ++i) {
    if (!(A(i, i) > 0.0)) throw std::invalid_argument("diagonal must be positive");
    for (Eigen::Index j = 0; j < i; ++j)
      if (A(i, j) != A(j, i)) throw std::invalid_argument("matrix is not symmetric");
  }
  if (n < 2) return true;
  const double f = 1.0 / static_cast<double>((n - 1) * (n - 1));
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j)
      if (i != j && !(A(i, j) * A(i, j) < f * A(i, i) * A(j, j))) return false;
  return true;
}

double max_generalized_eigenvalue(const SparseMatrix& A, const SparseMatrix& B, double tol,
                                  int max_iter) {
  Eigen::SimplicialLDLT<SparseMatrix> chol(B);
  if (chol.info() != Eigen::Success) throw SolverError("eigen estimate", "mass matrix not SPD");
  Eigen::VectorXd x = start_vector(static_cast<int>(A.rows()));
  double lambda = 0.0;
  for (int it = 0; it < max_iter; ++it) {
    Eigen::VectorXd y = chol.solve(A * x);
    const double norm = std::sqrt(y.dot(B * y));
    if (norm == 0.0) return 0.0;
    x = y / norm;
    const double next = x.dot(A * x);
    if (it > 0 && std::abs(next - lambda) <= tol * std::abs(next)) return next;
    lambda = next;
  }
  return lambda;
}

double min_generalized_eigenvalue(const SparseMatrix& A, const SparseMatrix& B, double tol,
                                  int max_iter) {
  Eigen::SimplicialLDLT<SparseMatrix> chol(A);
  if (chol.info() != Eigen::Success) throw SolverError("eigen estimate", "operator not SPD");
  Eigen::VectorXd x = start_vector(static_cast<int>(A.rows()));
  double lambda = 0.0;
  for (int it = 0; it < max_iter; ++it) {
    Eigen::VectorXd y = chol.solve(B * x);
    const double norm = std::sqrt(y.dot(B * y));
    x = y / norm;
    const double next = x.dot(A * x) / x.dot(B * x);
    if (it > 0 && std::abs(next - lambda) <= tol * std::abs(next)) return next;
    lambda = next;
  }
  return lambda;
}

StabilityConstants estimate_constants(const Discretization& d, const PhysicalParams& p) {
  const int nb = d.thick.num_dofs();
  auto sb = [&](int k) { return band_cell_dofs(d, d.thick, k); };
  TripletList tm, tk;
  add_cells(tm, d, d.tris_b, sb, sb, 0, 0, [](const auto& g) { return p1_mass(g); });
  add_cells(tk, d, d.tris_b, sb, sb, 0, 0, [](const auto& g) {
    return p1_stiffness(g, Eigen::Matrix2d::Identity().eval());
  });
  const SparseMatrix Mb = assemble(nb, nb, tm), Kb = assemble(nb, nb, tk);

  // interface mass on Gamma_+ in thick dofs
  TripletList tg;
  add_line_matrix(tg, d.M11, 1.0, [&](int c) { return d.thick_plus(c); },
                  [&](int c) { return d.thick_plus(c); });
  const SparseMatrix Gb = assemble(nb, nb, tg);

  // H^1_0 subspace: drop dofs on the outer thick boundary (or the drained top for the vessel)
  const std::vector<FacetTag> outer = d.mesh.boundary_case == BoundaryCase::Mms
                                          ? std::vector<FacetTag>{FacetTag::GammaB_top,
                                                                  FacetTag::GammaB_side}
                                          : std::vector<FacetTag>{FacetTag::GammaDr};
  std::vector<int> keep(nb, 0);
  for (int i : band_dofs_on(d, d.thick, outer)) keep[i] = -1;
  int n0 = 0;
  for (int& k : keep)
    if (k == 0) k = n0++;
  const SparseMatrix Mb0 = restrict_matrix(Mb, keep, n0), Kb0 = restrict_matrix(Kb, keep, n0),
                     Gb0 = restrict_matrix(Gb, keep, n0);

  StabilityConstants c;
  c.h = d.mesh.length / d.nx();
  c.H = p.H;
  c.C_P = std::sqrt(1.0 / min_generalized_eigenvalue(Kb0, Mb0));
  c.C_TR = std::sqrt(max_generalized_eigenvalue(Gb0, Kb0));
  c.C_INV = c.h * std::sqrt(max_generalized_eigenvalue(Kb, Mb));
  c.B_INV = c.h * std::sqrt(max_generalized_eigenvalue(d.K11, d.M11));
  c.C_TI = std::sqrt(c.h * max_generalized_eigenvalue(Gb, Mb));

  const int nf = d.fluid2.num_dofs();
  TripletList tf, tl;
  auto s2 = [&](int k) { return d.fluid2.cell_dofs[d.fluid_tri_local[k]]; };
  add_cells(tf, d, d.tris_f, s2, s2, 0, 0, [](const auto& g) { return p2_mass(g); });
  add_line_matrix(tl, d.M22, 1.0, [&](int j) { return d.fluid2_minus(j); },
                  [&](int j) { return d.fluid2_minus(j); });
  c.A_TI = std::sqrt(c.h * max_generalized_eigenvalue(assemble(nf, nf, tl), assemble(nf, nf, tf)));
  return c;
}

}  // namespace fpsi
