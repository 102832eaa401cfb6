#pragma once

#include "fpsi/elements.hpp"
#include "fpsi/mesh.hpp"

#include <Eigen/Sparse>

#include <array>
#include <vector>

namespace fpsi {

using SparseMatrix = Eigen::SparseMatrix<double>;

/// Continuous P1 on a contiguous band of vertex rows [row0, row1]. Dof index
/// is the vertex index shifted by the first row, so dofs are row-major.
struct RowBandSpace {
  int row0 = 0, row1 = 0, nx = 0;

  int num_dofs() const { return (row1 - row0 + 1) * (nx + 1); }
  int dof(int vertex) const;  // -1 outside the band
  int vertex(int dof) const { return dof + row0 * (nx + 1); }
  int dof_at(int row, int col) const { return (row - row0) * (nx + 1) + col; }
};

/// Continuous P2 on the fluid layer. Nodes live on the twice-refined grid of
/// the fluid rows; node (R, C) has index R * (2 nx + 1) + C.
struct FluidP2Space {
  int nx = 0, ny = 0;
  std::vector<std::array<int, 6>> cell_dofs;  // per fluid triangle, local P2 order
  Eigen::Matrix2Xd nodes;

  int num_dofs() const { return (2 * nx + 1) * (2 * ny + 1); }
  int node(int R, int C) const { return R * (2 * nx + 1) + C; }
};

/// All function spaces of the scheme plus the interface-line matrices.
/// Interface (line) vectors are indexed by column for P1 and by half-column
/// for P2: entry j of a P2 line vector sits at x = x_{j/2} or a midpoint.
struct Discretization {
  GluedMesh mesh;
  InterfaceMap imap;
  RowBandSpace thick, plate, fluid, pressure;  // pressure spans plate + thick rows
  FluidP2Space fluid2;
  std::vector<int> tris_b, tris_p, tris_f;
  std::vector<int> fluid_tri_local;  // global triangle -> index into fluid2.cell_dofs

  SparseMatrix M11, M12, M22, K11;  // line mass (P1), P1 x P2, P2 mass, P1 stiffness

  int nx() const { return mesh.nx; }
  int line_p1() const { return mesh.nx + 1; }
  int line_p2() const { return 2 * mesh.nx + 1; }

  /// Dof indices of interface traces.
  int thick_plus(int col) const { return thick.dof_at(mesh.row_plus, col); }
  int plate_plus(int col) const { return plate.dof_at(mesh.row_plus, col); }
  int plate_minus(int col) const { return plate.dof_at(mesh.row_minus, col); }
  int fluid_minus(int col) const { return fluid.dof_at(mesh.row_minus, col); }
  int fluid2_minus(int j) const { return fluid2.node(2 * mesh.ny_fluid, j); }

  Eigen::Matrix<double, 2, 3> triangle_coords(int k) const;
};

Discretization build_discretization(const RunConfig& cfg);

/// Vertex indices (in `space` dofs) touched by facets carrying any of `tags`.
std::vector<int> band_dofs_on(const Discretization& d, const RowBandSpace& space,
                              const std::vector<FacetTag>& tags);
/// Fluid P2 node indices on facets carrying any of `tags`.
std::vector<int> fluid2_dofs_on(const Discretization& d, const std::vector<FacetTag>& tags);

// Interpolation -------------------------------------------------------------

Eigen::VectorXd interpolate(const Discretization& d, const RowBandSpace& s, const ScalarField& f,
                            double t);
Eigen::Matrix2Xd interpolate(const Discretization& d, const RowBandSpace& s, const VectorField& f,
                             double t);
Eigen::Matrix2Xd interpolate_p2(const Discretization& d, const VectorField& f, double t);
/// P1 line interpolation of f(x, y_line, t).
Eigen::VectorXd interpolate_line(const Discretization& d, const ScalarField& f, double y_line,
                                 double t);

// Gathers between field vectors and line vectors -----------------------------

Eigen::VectorXd trace_plus(const Discretization& d, const Eigen::VectorXd& thick_field);
Eigen::VectorXd trace_plate_minus(const Discretization& d, const Eigen::VectorXd& plate_field);
Eigen::VectorXd trace_plate_plus(const Discretization& d, const Eigen::VectorXd& plate_field);
Eigen::VectorXd trace_fluid2_minus(const Discretization& d, const Eigen::VectorXd& p2_component);
Eigen::VectorXd trace_fluid_minus(const Discretization& d, const Eigen::VectorXd& fluid_p1);

// Norms and errors -----------------------------------------------------------

enum class FieldSpace { ThickP1, PlateP1, FluidP1, FluidP2, LineP1 };

/// Relative L2 error ||exact - discrete|| / ||exact||, using a quadrature rule
/// exact to degree 10 on the polynomial part. Throws if ||exact|| == 0.
double l2_error(const Discretization& d, FieldSpace space, const Eigen::VectorXd& nodal,
                const ScalarField& exact, double t);
double l2_error(const Discretization& d, FieldSpace space, const Eigen::Matrix2Xd& nodal,
                const VectorField& exact, double t);

/// Squared L2 norm of an analytic field over the carrier of `space`.
double l2_norm_sq(const Discretization& d, FieldSpace space, const ScalarField& f, double t);
double l2_norm_sq(const Discretization& d, FieldSpace space, const VectorField& f, double t);

}  // namespace fpsi
