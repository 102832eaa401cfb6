#pragma once

#include "fpsi/quadrature.hpp"

#include <Eigen/Dense>

#include <stdexcept>

namespace fpsi {

/// Affine triangle data. `grads` row i is the gradient of barycentric
/// coordinate i, which is also the P1 basis gradient.
template <class Scalar>
struct TriangleGeometry {
  Eigen::Matrix<Scalar, 2, 3> X;
  Eigen::Matrix<Scalar, 3, 2> grads;
  Scalar area;

  Eigen::Matrix<Scalar, 2, 1> map(Scalar x, Scalar y) const {
    return X.col(0) + (X.col(1) - X.col(0)) * x + (X.col(2) - X.col(0)) * y;
  }
};

template <class Scalar>
TriangleGeometry<Scalar> triangle_geometry(const Eigen::Matrix<Scalar, 2, 3>& X) {
  Eigen::Matrix<Scalar, 2, 2> J;
  J.col(0) = X.col(1) - X.col(0);
  J.col(1) = X.col(2) - X.col(0);
  const Scalar det = J.determinant();
  if (!(det > Scalar(0))) throw std::invalid_argument("triangle is degenerate or clockwise");
  Eigen::Matrix<Scalar, 3, 2> ref;
  ref << -1, -1, 1, 0, 0, 1;
  TriangleGeometry<Scalar> g;
  g.X = X;
  g.grads = ref * J.inverse();
  g.area = det / Scalar(2);
  return g;
}

template <class Scalar>
Eigen::Matrix<Scalar, 3, 1> p1_values(Scalar x, Scalar y) {
  return {Scalar(1) - x - y, x, y};
}

/// Quadratic Lagrange basis, node order v0, v1, v2, m01, m12, m20.
template <class Scalar>
Eigen::Matrix<Scalar, 6, 1> p2_values(Scalar x, Scalar y) {
  const Scalar l0 = Scalar(1) - x - y, l1 = x, l2 = y;
  Eigen::Matrix<Scalar, 6, 1> N;
  N << l0 * (2 * l0 - 1), l1 * (2 * l1 - 1), l2 * (2 * l2 - 1), 4 * l0 * l1, 4 * l1 * l2,
      4 * l2 * l0;
  return N;
}

/// Physical gradients of the P2 basis (rows) at reference point (x, y).
template <class Scalar>
Eigen::Matrix<Scalar, 6, 2> p2_grads(const TriangleGeometry<Scalar>& g, Scalar x, Scalar y) {
  const Scalar l0 = Scalar(1) - x - y, l1 = x, l2 = y;
  const auto d0 = g.grads.row(0), d1 = g.grads.row(1), d2 = g.grads.row(2);
  Eigen::Matrix<Scalar, 6, 2> D;
  D.row(0) = (4 * l0 - 1) * d0;
  D.row(1) = (4 * l1 - 1) * d1;
  D.row(2) = (4 * l2 - 1) * d2;
  D.row(3) = 4 * (l0 * d1 + l1 * d0);
  D.row(4) = 4 * (l1 * d2 + l2 * d1);
  D.row(5) = 4 * (l2 * d0 + l0 * d2);
  return D;
}

template <class Scalar>
Eigen::Matrix<Scalar, 3, 3> p1_mass(const TriangleGeometry<Scalar>& g) {
  Eigen::Matrix<Scalar, 3, 3> M = Eigen::Matrix<Scalar, 3, 3>::Constant(Scalar(1));
  M.diagonal().setConstant(Scalar(2));
  return M * (g.area / Scalar(12));
}

template <class Scalar>
Eigen::Matrix<Scalar, 3, 3> p1_stiffness(const TriangleGeometry<Scalar>& g,
                                         const Eigen::Matrix<Scalar, 2, 2>& k) {
  return g.area * g.grads * k * g.grads.transpose();
}

/// Block-diagonal vector mass, component-major dofs [x0 x1 x2 y0 y1 y2].
template <class Scalar>
Eigen::Matrix<Scalar, 6, 6> p1_vector_mass(const TriangleGeometry<Scalar>& g,
                                           const Eigen::Matrix<Scalar, 2, 2>& c) {
  const auto M = p1_mass(g);
  Eigen::Matrix<Scalar, 6, 6> out;
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b) out.template block<3, 3>(3 * a, 3 * b) = c(a, b) * M;
  return out;
}

/// Divergence of each vector basis function (constant on the element).
template <class Scalar>
Eigen::Matrix<Scalar, 6, 1> p1_divergence_row(const TriangleGeometry<Scalar>& g) {
  Eigen::Matrix<Scalar, 6, 1> d;
  d << g.grads.col(0), g.grads.col(1);
  return d;
}

template <class Scalar>
Eigen::Matrix<Scalar, 6, 6> p1_div_div(const TriangleGeometry<Scalar>& g) {
  const auto d = p1_divergence_row(g);
  return g.area * d * d.transpose();
}

/// (D(a), D(b)) for vector basis functions built from scalar gradients `G`.
template <class Scalar, int N>
Eigen::Matrix<Scalar, 2 * N, 2 * N> sym_grad_product(const Eigen::Matrix<Scalar, N, 2>& G) {
  Eigen::Matrix<Scalar, 3, 2 * N> E = Eigen::Matrix<Scalar, 3, 2 * N>::Zero();
  for (int i = 0; i < N; ++i) {
    E(0, i) = G(i, 0);
    E(2, i) = G(i, 1) / Scalar(2);
    E(1, N + i) = G(i, 1);
    E(2, N + i) = G(i, 0) / Scalar(2);
  }
  Eigen::Matrix<Scalar, 3, 3> W = Eigen::Matrix<Scalar, 3, 3>::Identity();
  W(2, 2) = Scalar(2);
  return E.transpose() * W * E;
}

template <class Scalar>
Eigen::Matrix<Scalar, 6, 6> p1_sym_grad(const TriangleGeometry<Scalar>& g) {
  return g.area * sym_grad_product<Scalar, 3>(g.grads);
}

/// (grad p, U): rows are vector test dofs, columns scalar trial dofs.
template <class Scalar>
Eigen::Matrix<Scalar, 6, 3> p1_grad_coupling(const TriangleGeometry<Scalar>& g) {
  Eigen::Matrix<Scalar, 6, 3> B;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      B(i, j) = g.area / Scalar(3) * g.grads(j, 0);
      B(3 + i, j) = g.area / Scalar(3) * g.grads(j, 1);
    }
  return B;
}

/// (d_y q, U): rows scalar test dofs, columns scalar trial dofs.
template <class Scalar>
Eigen::Matrix<Scalar, 3, 3> p1_normal_derivative(const TriangleGeometry<Scalar>& g) {
  Eigen::Matrix<Scalar, 3, 3> B;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) B(i, j) = g.area / Scalar(3) * g.grads(j, 1);
  return B;
}

template <class Scalar>
Eigen::Matrix<Scalar, 6, 6> p2_mass(const TriangleGeometry<Scalar>& g) {
  const auto q = dunavant4<Scalar>();
  Eigen::Matrix<Scalar, 6, 6> M = Eigen::Matrix<Scalar, 6, 6>::Zero();
  for (int k = 0; k < q.size(); ++k) {
    const auto N = p2_values<Scalar>(q.points(0, k), q.points(1, k));
    M += q.weights(k) * N * N.transpose();
  }
  return g.area * M;
}

/// 2 (D(u), D(U)) on P2 vectors, dofs [x0..x5 y0..y5]; the factor 2 is not included.
template <class Scalar>
Eigen::Matrix<Scalar, 12, 12> p2_sym_grad(const TriangleGeometry<Scalar>& g) {
  const auto q = dunavant4<Scalar>();
  Eigen::Matrix<Scalar, 12, 12> K = Eigen::Matrix<Scalar, 12, 12>::Zero();
  for (int k = 0; k < q.size(); ++k)
    K += q.weights(k) * sym_grad_product<Scalar, 6>(p2_grads(g, q.points(0, k), q.points(1, k)));
  return g.area * K;
}

/// (div u, Pi) with P2 vector trial and P1 scalar test: 3 x 12.
template <class Scalar>
Eigen::Matrix<Scalar, 3, 12> p2_p1_divergence(const TriangleGeometry<Scalar>& g) {
  const auto q = dunavant4<Scalar>();
  Eigen::Matrix<Scalar, 3, 12> B = Eigen::Matrix<Scalar, 3, 12>::Zero();
  for (int k = 0; k < q.size(); ++k) {
    const auto psi = p1_values<Scalar>(q.points(0, k), q.points(1, k));
    const auto D = p2_grads(g, q.points(0, k), q.points(1, k));
    B.template leftCols<6>() += q.weights(k) * psi * D.col(0).transpose();
    B.template rightCols<6>() += q.weights(k) * psi * D.col(1).transpose();
  }
  return g.area * B;
}

/// Segment basis values at s in [0, 1]. P2 order: start, midpoint, end.
template <class Scalar>
Eigen::Matrix<Scalar, 2, 1> segment_p1_values(Scalar s) {
  return {Scalar(1) - s, s};
}

template <class Scalar>
Eigen::Matrix<Scalar, 3, 1> segment_p2_values(Scalar s) {
  return {(Scalar(1) - s) * (Scalar(1) - 2 * s), 4 * s * (Scalar(1) - s), s * (2 * s - Scalar(1))};
}

template <class Scalar>
Eigen::Matrix<Scalar, 2, 2> segment_p1_mass(Scalar len) {
  Eigen::Matrix<Scalar, 2, 2> M;
  M << 2, 1, 1, 2;
  return M * (len / Scalar(6));
}

template <class Scalar>
Eigen::Matrix<Scalar, 2, 2> segment_p1_stiffness(Scalar len) {
  Eigen::Matrix<Scalar, 2, 2> K;
  K << 1, -1, -1, 1;
  return K / len;
}

template <class Scalar>
Eigen::Matrix<Scalar, 3, 3> segment_p2_mass(Scalar len) {
  const auto q = segment_rule<Scalar>(4);
  Eigen::Matrix<Scalar, 3, 3> M = Eigen::Matrix<Scalar, 3, 3>::Zero();
  for (int k = 0; k < q.size(); ++k) {
    const auto N = segment_p2_values<Scalar>(q.points(0, k));
    M += q.weights(k) * N * N.transpose();
  }
  return len * M;
}

/// Rows P1 test, columns P2 trial.
template <class Scalar>
Eigen::Matrix<Scalar, 2, 3> segment_p1_p2_mass(Scalar len) {
  const auto q = segment_rule<Scalar>(3);
  Eigen::Matrix<Scalar, 2, 3> M = Eigen::Matrix<Scalar, 2, 3>::Zero();
  for (int k = 0; k < q.size(); ++k)
    M += q.weights(k) * segment_p1_values<Scalar>(q.points(0, k)) *
         segment_p2_values<Scalar>(q.points(0, k)).transpose();
  return len * M;
}

/// Named local forms. Triangle forms take a TriangleGeometry, segment forms a length.
enum class LocalForm {
  Mass,
  Stiffness,
  DivDiv,
  SymGradSymGrad,
  GradPressureCoupling,
  DarcyMass,
  NormalDerivative,
  PlateBending,
  TangentialSlip,
  PressureDiv,
  PenaltyFacet,
};

enum class ElementKind { P1Triangle, P2Triangle, P1Segment, P2Segment };

/// Dispatches to the kernels above; `coef` scales the result and `tensor` is
/// used by the anisotropic forms. Throws on an unsupported combination.
template <class Scalar>
Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> local_matrix(
    LocalForm form, ElementKind kind, const Eigen::Matrix<Scalar, 2, 3>& X, Scalar coef = Scalar(1),
    const Eigen::Matrix<Scalar, 2, 2>& tensor = Eigen::Matrix<Scalar, 2, 2>::Identity()) {
  using Mat = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
  const Scalar len = (X.col(1) - X.col(0)).norm();
  auto mismatch = [] { return std::invalid_argument("form is not defined for this element"); };
  switch (form) {
    case LocalForm::Mass:
      if (kind == ElementKind::P1Triangle) return coef * Mat(p1_mass(triangle_geometry(X)));
      if (kind == ElementKind::P2Triangle) return coef * Mat(p2_mass(triangle_geometry(X)));
      if (kind == ElementKind::P1Segment) return coef * Mat(segment_p1_mass(len));
      return coef * Mat(segment_p2_mass(len));
    case LocalForm::Stiffness:
      if (kind == ElementKind::P1Triangle)
        return coef * Mat(p1_stiffness(triangle_geometry(X), tensor));
      if (kind == ElementKind::P1Segment) return coef * Mat(segment_p1_stiffness(len));
      throw mismatch();
    case LocalForm::DivDiv:
      if (kind == ElementKind::P1Triangle) return coef * Mat(p1_div_div(triangle_geometry(X)));
      throw mismatch();
    case LocalForm::SymGradSymGrad:
      if (kind == ElementKind::P1Triangle) return coef * Mat(p1_sym_grad(triangle_geometry(X)));
      if (kind == ElementKind::P2Triangle) return coef * Mat(p2_sym_grad(triangle_geometry(X)));
      throw mismatch();
    case LocalForm::GradPressureCoupling:
      if (kind == ElementKind::P1Triangle)
        return coef * Mat(p1_grad_coupling(triangle_geometry(X)));
      throw mismatch();
    case LocalForm::DarcyMass:
      if (kind == ElementKind::P1Triangle)
        return coef * Mat(p1_vector_mass(triangle_geometry(X), tensor.inverse().eval()));
      throw mismatch();
    case LocalForm::NormalDerivative:
      if (kind == ElementKind::P1Triangle)
        return coef * Mat(p1_normal_derivative(triangle_geometry(X)));
      throw mismatch();
    case LocalForm::PlateBending:
      if (kind == ElementKind::P1Segment) return coef * Mat(segment_p1_stiffness(len));
      throw mismatch();
    case LocalForm::TangentialSlip:
      if (kind == ElementKind::P2Segment) return coef * Mat(segment_p2_mass(len));
      throw mismatch();
    case LocalForm::PressureDiv:
      if (kind == ElementKind::P2Triangle)
        return coef * Mat(p2_p1_divergence(triangle_geometry(X)));
      throw mismatch();
    case LocalForm::PenaltyFacet:
      if (kind == ElementKind::P1Segment) return coef * Mat(segment_p1_mass(len));
      if (kind == ElementKind::P2Segment) return coef * Mat(segment_p2_mass(len));
      throw mismatch();
  }
  throw mismatch();
}

}  // namespace fpsi
