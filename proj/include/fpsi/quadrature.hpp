#pragma once

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>

#include <cmath>
#include <vector>

namespace fpsi {

/// Points in reference coordinates and weights normalized to the reference
/// measure of 1 (so weights sum to one and integrals scale by |K|).
template <class Scalar>
struct QuadratureRule {
  Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> points;  // dim x n
  Eigen::Matrix<Scalar, Eigen::Dynamic, 1> weights;
  int degree = 0;

  int size() const { return static_cast<int>(weights.size()); }
};

/// n-point Gauss-Legendre rule on [0, 1] via the Golub-Welsch eigenproblem.
template <class Scalar>
QuadratureRule<Scalar> gauss_legendre(int n) {
  using Mat = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
  Mat J = Mat::Zero(n, n);
  for (int k = 1; k < n; ++k) {
    const Scalar b = Scalar(k) / std::sqrt(Scalar(4 * k * k - 1));
    J(k, k - 1) = b;
    J(k - 1, k) = b;
  }
  Eigen::SelfAdjointEigenSolver<Mat> es(J);
  QuadratureRule<Scalar> r;
  r.points.resize(1, n);
  r.weights.resize(n);
  for (int i = 0; i < n; ++i) {
    r.points(0, i) = (es.eigenvalues()(i) + Scalar(1)) / Scalar(2);
    const Scalar v0 = es.eigenvectors()(0, i);
    r.weights(i) = v0 * v0;
  }
  r.degree = 2 * n - 1;
  return r;
}

/// Six-point rule exact for polynomials of degree 4 on the reference triangle.
/// Points are (x, y) with barycentric coordinates (1 - x - y, x, y).
template <class Scalar>
QuadratureRule<Scalar> dunavant4() {
  const Scalar a1 = Scalar(0.445948490915965), w1 = Scalar(0.223381589678011);
  const Scalar a2 = Scalar(0.091576213509771), w2 = Scalar(0.109951743655322);
  QuadratureRule<Scalar> r;
  r.points.resize(2, 6);
  r.weights.resize(6);
  const Scalar b1 = Scalar(1) - 2 * a1, b2 = Scalar(1) - 2 * a2;
  r.points.col(0) << a1, a1;
  r.points.col(1) << b1, a1;
  r.points.col(2) << a1, b1;
  r.points.col(3) << a2, a2;
  r.points.col(4) << b2, a2;
  r.points.col(5) << a2, b2;
  r.weights << w1, w1, w1, w2, w2, w2;
  r.degree = 4;
  return r;
}

/// Collapsed tensor Gauss rule on the reference triangle with n^2 points,
/// exact to degree 2n - 2.
template <class Scalar>
QuadratureRule<Scalar> collapsed_gauss(int n) {
  const auto g = gauss_legendre<Scalar>(n);
  QuadratureRule<Scalar> r;
  r.points.resize(2, n * n);
  r.weights.resize(n * n);
  int k = 0;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j, ++k) {
      const Scalar u = g.points(0, i), v = g.points(0, j);
      r.points(0, k) = u;
      r.points(1, k) = v * (Scalar(1) - u);
      r.weights(k) = Scalar(2) * g.weights(i) * g.weights(j) * (Scalar(1) - u);
    }
  }
  r.degree = 2 * n - 2;
  return r;
}

/// Cheapest available triangle rule with at least the requested exactness.
template <class Scalar>
QuadratureRule<Scalar> triangle_rule(int degree) {
  if (degree <= 4) return dunavant4<Scalar>();
  return collapsed_gauss<Scalar>((degree + 3) / 2);
}

/// Gauss rule on [0, 1] with at least the requested exactness.
template <class Scalar>
QuadratureRule<Scalar> segment_rule(int degree) {
  return gauss_legendre<Scalar>(std::max(1, (degree + 2) / 2));
}

}  // namespace fpsi
