#include "fpsi/fem.hpp"

#include "fpsi/sparse.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <stdexcept>

namespace fpsi {

int RowBandSpace::dof(int v) const {
  const int row = v / (nx + 1);
  if (row < row0 || row > row1) return -1;
  return v - row0 * (nx + 1);
}

Eigen::Matrix<double, 2, 3> Discretization::triangle_coords(int k) const {
  Eigen::Matrix<double, 2, 3> X;
  const auto& t = mesh.triangles[k];
  for (int i = 0; i < 3; ++i) X.col(i) = mesh.vertices.col(t[i]);
  return X;
}

Discretization build_discretization(const RunConfig& cfg) {
  Discretization d;
  d.mesh = build_glued_mesh(cfg);
  d.imap = build_interface_map(d.mesh);
  const auto& m = d.mesh;
  d.thick = {m.row_plus, m.row_top, m.nx};
  d.plate = {m.row_minus, m.row_plus, m.nx};
  d.fluid = {0, m.row_minus, m.nx};
  d.pressure = {m.row_minus, m.row_top, m.nx};
  d.tris_b = m.triangles_in(Subdomain::B);
  d.tris_p = m.triangles_in(Subdomain::P);
  d.tris_f = m.triangles_in(Subdomain::F);

  auto& f2 = d.fluid2;
  f2.nx = m.nx;
  f2.ny = m.ny_fluid;
  f2.nodes.resize(2, f2.num_dofs());
  for (int R = 0; R <= 2 * f2.ny; ++R) {
    for (int C = 0; C <= 2 * f2.nx; ++C) {
      const int r0 = R / 2, c0 = C / 2;
      const double x = (C % 2 == 0) ? m.xgrid[c0] : 0.5 * (m.xgrid[c0] + m.xgrid[c0 + 1]);
      const double y0 = m.vertices(1, m.vertex(r0, 0));
      const double y = (R % 2 == 0) ? y0 : 0.5 * (y0 + m.vertices(1, m.vertex(r0 + 1, 0)));
      f2.nodes.col(f2.node(R, C)) << x, y;
    }
  }
  d.fluid_tri_local.assign(m.num_triangles(), -1);
  for (int k : d.tris_f) {
    const auto& t = m.triangles[k];
    std::array<int, 3> R{}, C{};
    for (int i = 0; i < 3; ++i) {
      R[i] = 2 * m.row_of(t[i]);
      C[i] = 2 * m.col_of(t[i]);
    }
    auto mid = [&](int a, int b) { return f2.node((R[a] + R[b]) / 2, (C[a] + C[b]) / 2); };
    d.fluid_tri_local[k] = static_cast<int>(f2.cell_dofs.size());
    f2.cell_dofs.push_back({f2.node(R[0], C[0]), f2.node(R[1], C[1]), f2.node(R[2], C[2]),
                            mid(0, 1), mid(1, 2), mid(2, 0)});
  }

  const int n1 = d.line_p1(), n2 = d.line_p2();
  TripletList m11, m12, m22, k11;
  for (int c = 0; c < m.nx; ++c) {
    const double len = m.xgrid[c + 1] - m.xgrid[c];
    const auto A = segment_p1_mass(len);
    const auto B = segment_p1_p2_mass(len);
    const auto C = segment_p2_mass(len);
    const auto K = segment_p1_stiffness(len);
    for (int i = 0; i < 2; ++i) {
      for (int j = 0; j < 2; ++j) {
        m11.add(c + i, c + j, A(i, j));
        k11.add(c + i, c + j, K(i, j));
      }
      for (int j = 0; j < 3; ++j) m12.add(c + i, 2 * c + j, B(i, j));
    }
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) m22.add(2 * c + i, 2 * c + j, C(i, j));
  }
  d.M11 = assemble(n1, n1, m11);
  d.M12 = assemble(n1, n2, m12);
  d.M22 = assemble(n2, n2, m22);
  d.K11 = assemble(n1, n1, k11);
  return d;
}

std::vector<int> band_dofs_on(const Discretization& d, const RowBandSpace& space,
                              const std::vector<FacetTag>& tags) {
  std::set<int> out;
  for (const auto& f : d.mesh.facets) {
    if (std::find(tags.begin(), tags.end(), f.tag) == tags.end()) continue;
    for (int v : f.v) {
      const int dof = space.dof(v);
      if (dof >= 0) out.insert(dof);
    }
  }
  return {out.begin(), out.end()};
}

std::vector<int> fluid2_dofs_on(const Discretization& d, const std::vector<FacetTag>& tags) {
  std::set<int> out;
  const auto& m = d.mesh;
  for (const auto& f : m.facets) {
    if (f.subdomain != Subdomain::F) continue;
    if (std::find(tags.begin(), tags.end(), f.tag) == tags.end()) continue;
    const int Ra = 2 * m.row_of(f.v[0]), Ca = 2 * m.col_of(f.v[0]);
    const int Rb = 2 * m.row_of(f.v[1]), Cb = 2 * m.col_of(f.v[1]);
    out.insert(d.fluid2.node(Ra, Ca));
    out.insert(d.fluid2.node(Rb, Cb));
    out.insert(d.fluid2.node((Ra + Rb) / 2, (Ca + Cb) / 2));
  }
  return {out.begin(), out.end()};
}

Eigen::VectorXd interpolate(const Discretization& d, const RowBandSpace& s, const ScalarField& f,
                            double t) {
  Eigen::VectorXd out(s.num_dofs());
  for (int i = 0; i < s.num_dofs(); ++i) {
    const auto x = d.mesh.vertices.col(s.vertex(i));
    out(i) = f(x(0), x(1), t);
  }
  return out;
}

Eigen::Matrix2Xd interpolate(const Discretization& d, const RowBandSpace& s, const VectorField& f,
                             double t) {
  Eigen::Matrix2Xd out(2, s.num_dofs());
  for (int i = 0; i < s.num_dofs(); ++i) {
    const auto x = d.mesh.vertices.col(s.vertex(i));
    out.col(i) = f(x(0), x(1), t);
  }
  return out;
}

Eigen::Matrix2Xd interpolate_p2(const Discretization& d, const VectorField& f, double t) {
  Eigen::Matrix2Xd out(2, d.fluid2.num_dofs());
  for (int i = 0; i < d.fluid2.num_dofs(); ++i)
    out.col(i) = f(d.fluid2.nodes(0, i), d.fluid2.nodes(1, i), t);
  return out;
}

Eigen::VectorXd interpolate_line(const Discretization& d, const ScalarField& f, double y_line,
                                 double t) {
  Eigen::VectorXd out(d.line_p1());
  for (int c = 0; c < d.line_p1(); ++c) out(c) = f(d.mesh.xgrid[c], y_line, t);
  return out;
}

Eigen::VectorXd trace_plus(const Discretization& d, const Eigen::VectorXd& thick_field) {
  Eigen::VectorXd out(d.line_p1());
  for (int c = 0; c < d.line_p1(); ++c) out(c) = thick_field(d.thick_plus(c));
  return out;
}

Eigen::VectorXd trace_plate_minus(const Discretization& d, const Eigen::VectorXd& plate_field) {
  Eigen::VectorXd out(d.line_p1());
  for (int c = 0; c < d.line_p1(); ++c) out(c) = plate_field(d.plate_minus(c));
  return out;
}

Eigen::VectorXd trace_plate_plus(const Discretization& d, const Eigen::VectorXd& plate_field) {
  Eigen::VectorXd out(d.line_p1());
  for (int c = 0; c < d.line_p1(); ++c) out(c) = plate_field(d.plate_plus(c));
  return out;
}

Eigen::VectorXd trace_fluid2_minus(const Discretization& d, const Eigen::VectorXd& p2_component) {
  Eigen::VectorXd out(d.line_p2());
  for (int j = 0; j < d.line_p2(); ++j) out(j) = p2_component(d.fluid2_minus(j));
  return out;
}

Eigen::VectorXd trace_fluid_minus(const Discretization& d, const Eigen::VectorXd& fluid_p1) {
  Eigen::VectorXd out(d.line_p1());
  for (int c = 0; c < d.line_p1(); ++c) out(c) = fluid_p1(d.fluid_minus(c));
  return out;
}

namespace {

constexpr int kErrorDegree = 10;

const std::vector<int>& triangles_for(const Discretization& d, FieldSpace s) {
  switch (s) {
    case FieldSpace::ThickP1:
      return d.tris_b;
    case FieldSpace::PlateP1:
      return d.tris_p;
    case FieldSpace::FluidP1:
    case FieldSpace::FluidP2:
      return d.tris_f;
    case FieldSpace::LineP1:
      break;
  }
  throw std::invalid_argument("line space has no triangles");
}

const RowBandSpace& band_for(const Discretization& d, FieldSpace s) {
  switch (s) {
    case FieldSpace::ThickP1:
      return d.thick;
    case FieldSpace::PlateP1:
      return d.plate;
    default:
      return d.fluid;
  }
}

/// Integrates g(value_index, x, y) over the carrier, where the discrete field
/// at the quadrature point is supplied through `eval(rows, k, qx, qy)`.
template <int Dim, class Nodal, class Exact>
std::pair<double, double> error_and_norm(const Discretization& d, FieldSpace s, const Nodal& nodal,
                                         const Exact& exact, double t) {
  using Vec = Eigen::Matrix<double, Dim, 1>;
  double err = 0.0, norm = 0.0;
  if (s == FieldSpace::LineP1) {
    const auto q = segment_rule<double>(kErrorDegree);
    const double y = d.mesh.vertices(1, d.mesh.vertex(d.mesh.row_plus, 0));
    for (int c = 0; c < d.nx(); ++c) {
      const double x0 = d.mesh.xgrid[c], x1 = d.mesh.xgrid[c + 1];
      for (int k = 0; k < q.size(); ++k) {
        const double sq = q.points(0, k);
        const Vec uh = (1.0 - sq) * Vec(nodal.col(c)) + sq * Vec(nodal.col(c + 1));
        const Vec ue = exact(x0 + sq * (x1 - x0), y, t);
        err += q.weights(k) * (x1 - x0) * (ue - uh).squaredNorm();
        norm += q.weights(k) * (x1 - x0) * ue.squaredNorm();
      }
    }
    return {err, norm};
  }
  const auto q = triangle_rule<double>(kErrorDegree);
  for (int tri : triangles_for(d, s)) {
    const auto g = triangle_geometry<double>(d.triangle_coords(tri));
    for (int k = 0; k < q.size(); ++k) {
      const double qx = q.points(0, k), qy = q.points(1, k);
      Vec uh = Vec::Zero();
      if (s == FieldSpace::FluidP2) {
        const auto N = p2_values(qx, qy);
        const auto& dofs = d.fluid2.cell_dofs[d.fluid_tri_local[tri]];
        for (int i = 0; i < 6; ++i) uh += N(i) * Vec(nodal.col(dofs[i]));
      } else {
        const auto N = p1_values(qx, qy);
        const auto& band = band_for(d, s);
        for (int i = 0; i < 3; ++i)
          uh += N(i) * Vec(nodal.col(band.dof(d.mesh.triangles[tri][i])));
      }
      const auto x = g.map(qx, qy);
      const Vec ue = exact(x(0), x(1), t);
      err += q.weights(k) * g.area * (ue - uh).squaredNorm();
      norm += q.weights(k) * g.area * ue.squaredNorm();
    }
  }
  return {err, norm};
}

double relative(std::pair<double, double> en) {
  if (!(en.second > 0.0)) throw std::invalid_argument("exact field has zero norm");
  return std::sqrt(en.first / en.second);
}

}  // namespace

double l2_error(const Discretization& d, FieldSpace space, const Eigen::VectorXd& nodal,
                const ScalarField& exact, double t) {
  const Eigen::Matrix<double, 1, Eigen::Dynamic> row = nodal.transpose();
  auto ex = [&](double x, double y, double tt) {
    return Eigen::Matrix<double, 1, 1>(exact(x, y, tt));
  };
  return relative(error_and_norm<1>(d, space, row, ex, t));
}

double l2_error(const Discretization& d, FieldSpace space, const Eigen::Matrix2Xd& nodal,
                const VectorField& exact, double t) {
  return relative(error_and_norm<2>(d, space, nodal, exact, t));
}

double l2_norm_sq(const Discretization& d, FieldSpace space, const ScalarField& f, double t) {
  const int n = space == FieldSpace::FluidP2 ? d.fluid2.num_dofs()
                : space == FieldSpace::LineP1 ? d.line_p1()
                                              : band_for(d, space).num_dofs();
  const Eigen::Matrix<double, 1, Eigen::Dynamic> zero = Eigen::RowVectorXd::Zero(n);
  auto ex = [&](double x, double y, double tt) {
    return Eigen::Matrix<double, 1, 1>(f(x, y, tt));
  };
  return error_and_norm<1>(d, space, zero, ex, t).second;
}

double l2_norm_sq(const Discretization& d, FieldSpace space, const VectorField& f, double t) {
  const int n = space == FieldSpace::FluidP2 ? d.fluid2.num_dofs()
                : space == FieldSpace::LineP1 ? d.line_p1()
                                              : band_for(d, space).num_dofs();
  const Eigen::Matrix2Xd zero = Eigen::Matrix2Xd::Zero(2, n);
  return error_and_norm<2>(d, space, zero, f, t).second;
}

}  // namespace fpsi
