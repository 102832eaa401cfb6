#pragma once

#include <Eigen/Sparse>
#include <Eigen/SparseLU>

#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

namespace fpsi {

using SparseMatrix = Eigen::SparseMatrix<double>;

/// Raised when a linear system cannot be factorized or solved accurately.
class SolverError : public std::runtime_error {
 public:
  SolverError(const std::string& system, const std::string& what)
      : std::runtime_error(system + ": " + what), system_(system) {}
  const std::string& system() const { return system_; }

 private:
  std::string system_;
};

/// Coordinate-format contributions. Duplicates are summed by `assemble`.
class TripletList {
 public:
  void add(int row, int col, double value) { entries_.emplace_back(row, col, value); }
  template <class Block, class Rows, class Cols>
  void add_block(const Rows& rows, const Cols& cols, const Block& B) {
    for (int i = 0; i < static_cast<int>(rows.size()); ++i)
      for (int j = 0; j < static_cast<int>(cols.size()); ++j)
        if (B(i, j) != 0.0) add(rows[i], cols[j], B(i, j));
  }
  void append(const TripletList& other) {
    entries_.insert(entries_.end(), other.entries_.begin(), other.entries_.end());
  }
  std::size_t size() const { return entries_.size(); }
  std::vector<Eigen::Triplet<double>>& entries() { return entries_; }
  const std::vector<Eigen::Triplet<double>>& entries() const { return entries_; }

 private:
  std::vector<Eigen::Triplet<double>> entries_;
};

/// Sums duplicate entries in a canonical order, so the result does not depend
/// on the order in which contributions were added. Throws std::out_of_range.
SparseMatrix assemble(int rows, int cols, const TripletList& contributions);

/// Matrix, right-hand side and essential constraints.
struct SparseSystem {
  SparseMatrix A;
  Eigen::VectorXd rhs;
  std::vector<int> constrained;
  Eigen::VectorXd values;  // same length as `constrained`
  std::string name = "system";
};

/// Symmetric elimination: constrained rows and columns become identity,
/// known values move to the right-hand side.
void apply_constraints(SparseSystem& sys);

/// Direct solve with iterative refinement to relative residual <= tol.
Eigen::VectorXd solve(const SparseSystem& sys, double tol = 1e-10);

/// Factorization of a constrained operator reused across right-hand sides.
/// The constrained dof set is fixed at construction; values may change per solve.
class ConstrainedSolver {
 public:
  ConstrainedSolver(std::string name, const SparseMatrix& A, std::vector<int> constrained,
                    double tol = 1e-10);

  /// `rhs` is the unconstrained load; `g` holds prescribed values at constrained
  /// positions (other entries are ignored).
  Eigen::VectorXd solve(const Eigen::VectorXd& rhs, const Eigen::VectorXd& g) const;

  const SparseMatrix& matrix() const { return A_; }
  const SparseMatrix& reduced_matrix() const { return Ac_; }
  const std::vector<int>& constrained() const { return constrained_; }
  const std::string& name() const { return name_; }

 private:
  std::string name_;
  SparseMatrix A_;    // before constraints
  SparseMatrix Ac_;   // with identity rows/cols
  SparseMatrix Acol_; // columns of A at constrained dofs, other rows only
  std::vector<int> constrained_;
  std::vector<char> is_constrained_;
  double tol_;
  std::unique_ptr<Eigen::SparseLU<SparseMatrix, Eigen::COLAMDOrdering<int>>> lu_;
};

/// Writes a MatrixMarket coordinate file.
void save_matrix_market(const SparseMatrix& A, const std::string& path);

}  // namespace fpsi
