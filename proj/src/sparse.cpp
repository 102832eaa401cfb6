#include "fpsi/sparse.hpp"

#include <unsupported/Eigen/SparseExtra>

#include <algorithm>
#include <sstream>

namespace fpsi {

SparseMatrix assemble(int rows, int cols, const TripletList& contributions) {
  std::vector<Eigen::Triplet<double>> t = contributions.entries();
  for (const auto& e : t) {
    if (e.row() < 0 || e.row() >= rows || e.col() < 0 || e.col() >= cols) {
      std::ostringstream os;
      os << "entry (" << e.row() << ", " << e.col() << ") outside " << rows << " x " << cols;
      throw std::out_of_range(os.str());
    }
  }
  std::sort(t.begin(), t.end(), [](const auto& a, const auto& b) {
    if (a.col() != b.col()) return a.col() < b.col();
    if (a.row() != b.row()) return a.row() < b.row();
    return a.value() < b.value();
  });
  SparseMatrix A(rows, cols);
  A.setFromTriplets(t.begin(), t.end());
  A.makeCompressed();
  return A;
}

namespace {

SparseMatrix eliminate(const SparseMatrix& A, const std::vector<char>& mask) {
  TripletList t;
  for (int k = 0; k < A.outerSize(); ++k)
    for (SparseMatrix::InnerIterator it(A, k); it; ++it)
      if (!mask[it.row()] && !mask[it.col()]) t.add(it.row(), it.col(), it.value());
  for (int i = 0; i < A.rows(); ++i)
    if (mask[i]) t.add(i, i, 1.0);
  return assemble(A.rows(), A.cols(), t);
}

SparseMatrix constrained_columns(const SparseMatrix& A, const std::vector<char>& mask) {
  TripletList t;
  for (int k = 0; k < A.outerSize(); ++k)
    for (SparseMatrix::InnerIterator it(A, k); it; ++it)
      if (!mask[it.row()] && mask[it.col()]) t.add(it.row(), it.col(), it.value());
  return assemble(A.rows(), A.cols(), t);
}

std::vector<char> mask_of(int n, const std::vector<int>& dofs) {
  std::vector<char> mask(n, 0);
  for (int i : dofs) {
    if (i < 0 || i >= n) throw std::out_of_range("constrained dof out of range");
    mask[i] = 1;
  }
  return mask;
}

}  // namespace

void apply_constraints(SparseSystem& sys) {
  const int n = static_cast<int>(sys.A.rows());
  const auto mask = mask_of(n, sys.constrained);
  Eigen::VectorXd g = Eigen::VectorXd::Zero(n);
  for (std::size_t i = 0; i < sys.constrained.size(); ++i) g(sys.constrained[i]) = sys.values(i);
  sys.rhs -= constrained_columns(sys.A, mask) * g;
  for (int i : sys.constrained) sys.rhs(i) = g(i);
  sys.A = eliminate(sys.A, mask);
}

Eigen::VectorXd solve(const SparseSystem& sys, double tol) {
  if (sys.A.rows() != sys.A.cols() || sys.A.rows() != sys.rhs.size())
    throw SolverError(sys.name, "dimension mismatch");
  SparseSystem s = sys;
  if (!s.constrained.empty()) apply_constraints(s);
  ConstrainedSolver solver(s.name, s.A, {}, tol);
  return solver.solve(s.rhs, Eigen::VectorXd::Zero(s.rhs.size()));
}

ConstrainedSolver::ConstrainedSolver(std::string name, const SparseMatrix& A,
                                     std::vector<int> constrained, double tol)
    : name_(std::move(name)), A_(A), constrained_(std::move(constrained)), tol_(tol) {
  if (A.rows() != A.cols()) throw SolverError(name_, "matrix is not square");
  std::sort(constrained_.begin(), constrained_.end());
  constrained_.erase(std::unique(constrained_.begin(), constrained_.end()), constrained_.end());
  is_constrained_ = mask_of(static_cast<int>(A.rows()), constrained_);
  Ac_ = eliminate(A_, is_constrained_);
  Acol_ = constrained_columns(A_, is_constrained_);
  lu_ = std::make_unique<Eigen::SparseLU<SparseMatrix, Eigen::COLAMDOrdering<int>>>();
  lu_->analyzePattern(Ac_);
  lu_->factorize(Ac_);
  if (lu_->info() != Eigen::Success)
    throw SolverError(name_, "factorization failed (" + lu_->lastErrorMessage() + ")");
}

Eigen::VectorXd ConstrainedSolver::solve(const Eigen::VectorXd& rhs,
                                         const Eigen::VectorXd& g) const {
  if (rhs.size() != A_.rows()) throw SolverError(name_, "right-hand side has wrong length");
  Eigen::VectorXd gc = Eigen::VectorXd::Zero(rhs.size());
  for (int i : constrained_) gc(i) = g(i);
  Eigen::VectorXd b = rhs - Acol_ * gc;
  for (int i : constrained_) b(i) = gc(i);

  const double bnorm = b.norm();
  if (bnorm == 0.0) return Eigen::VectorXd::Zero(b.size());
  Eigen::VectorXd x = lu_->solve(b);
  if (lu_->info() != Eigen::Success) throw SolverError(name_, "back substitution failed");
  double rel = (b - Ac_ * x).norm() / bnorm;
  for (int it = 0; it < 5 && rel > tol_; ++it) {
    x += lu_->solve(b - Ac_ * x);
    rel = (b - Ac_ * x).norm() / bnorm;
  }
  if (!(rel <= tol_)) {
    std::ostringstream os;
    os << "relative residual " << rel << " exceeds " << tol_;
    throw SolverError(name_, os.str());
  }
  return x;
}

void save_matrix_market(const SparseMatrix& A, const std::string& path) {
  if (!Eigen::saveMarket(A, path)) throw std::runtime_error("cannot write " + path);
}

}  // namespace fpsi
