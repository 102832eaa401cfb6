#pragma once

#include "fpsi/fem.hpp"

#include <optional>

namespace fpsi {

/// Estimates of the inequality constants entering the time-step bounds.
///   C_P   |p| <= C_P |grad p|                (p vanishing on the outer thick boundary)
///   C_TR  |p|_{Gamma+} <= C_TR |grad p|
///   C_INV |grad xi| <= C_INV / h |xi|
///   B_INV |d_x v| <= B_INV / h |v|           (interface line)
///   C_TI  |v|_{Gamma+} <= C_TI / sqrt(h) |xi|
///   A_TI  |u|_{Gamma-} <= A_TI / sqrt(h) |u|
struct StabilityConstants {
  double C_P = 1.0, C_TR = 1.0, C_INV = 1.0, B_INV = 1.0, C_TI = 1.0, A_TI = 1.0;
  double h = 1.0;
  double H = 1.0;
};

/// Throws ConfigError unless every constant is positive.
void validate_constants(const StabilityConstants& c);

/// Minimum of the four bounds for the isolated system; terms whose
/// denominator vanishes count as +infinity.
double dt_bound_thm54(const PhysicalParams& p, const StabilityConstants& c);

/// (M/4) min{k_min h / C_TR^2, kappa_p h / H} without checking the parameter conditions.
double dt_bound_thm55_value(const PhysicalParams& p, const StabilityConstants& c);

/// As above, or nullopt when either parameter condition fails.
std::optional<double> dt_bound_thm55(const PhysicalParams& p, const StabilityConstants& c);

/// Strict diagonal-dominance test A_ij^2 < A_ii A_jj / (n-1)^2 for all i != j.
/// Throws std::invalid_argument for a non-symmetric or non-positive-diagonal matrix.
bool lemma53_condition(const Eigen::MatrixXd& A);

/// Generalized Rayleigh-quotient estimates on the given discretization, with
/// h the horizontal mesh spacing. Uses inverse and power iteration.
StabilityConstants estimate_constants(const Discretization& d, const PhysicalParams& p);

/// Largest eigenvalue of A x = lambda B x (A symmetric positive semidefinite,
/// B symmetric positive definite), by power iteration on B^{-1} A.
double max_generalized_eigenvalue(const SparseMatrix& A, const SparseMatrix& B, double tol = 1e-8,
                                  int max_iter = 5000);
/// Smallest eigenvalue of A x = lambda B x for A positive definite, by inverse iteration.
double min_generalized_eigenvalue(const SparseMatrix& A, const SparseMatrix& B, double tol = 1e-10,
                                  int max_iter = 5000);

}  // namespace fpsi
