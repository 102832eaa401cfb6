#pragma once

#include "fpsi/core_model.hpp"

#include <array>
#include <string>
#include <vector>

namespace fpsi {

enum class Subdomain { B, P, F };

enum class FacetTag {
  GammaPlus,
  GammaMinus,
  GammaB_top,
  GammaB_side,
  GammaF_bottom,
  GammaF_side,
  GammaP_side,
  GammaIn,
  GammaOut,
  GammaSym,
  GammaDr,
  GammaIm,
};

std::string to_string(FacetTag tag);
FacetTag facet_tag_from_string(const std::string& s);

/// Edge on a subdomain boundary. `triangle` is the adjacent triangle in
/// `subdomain`; interface edges appear once per side.
struct Facet {
  std::array<int, 2> v;
  FacetTag tag;
  Subdomain subdomain;
  int triangle;
};

/// Structured triangulation of the glued domain. Vertex rows are numbered from
/// the bottom of the fluid layer upward: rows [0, row_minus] are fluid,
/// [row_minus, row_plus] plate and [row_plus, row_top] thick layer.
struct GluedMesh {
  Eigen::Matrix2Xd vertices;
  std::vector<std::array<int, 3>> triangles;
  std::vector<Subdomain> triangle_domain;
  std::vector<Facet> facets;
  /// Plate vertex indices per column, ordered by increasing y.
  std::vector<std::vector<int>> columns;

  BoundaryCase boundary_case = BoundaryCase::Mms;
  int nx = 0;
  int ny_thick = 0, ny_plate = 0, ny_fluid = 0;
  int row_minus = 0, row_plus = 0, row_top = 0;
  double length = 0.0, thick_height = 0.0, plate_thickness = 0.0, fluid_height = 0.0;
  std::vector<double> xgrid;

  int num_vertices() const { return static_cast<int>(vertices.cols()); }
  int num_triangles() const { return static_cast<int>(triangles.size()); }
  int vertex(int row, int col) const { return row * (nx + 1) + col; }
  int row_of(int v) const { return v / (nx + 1); }
  int col_of(int v) const { return v % (nx + 1); }

  std::vector<int> triangles_in(Subdomain d) const;
  std::vector<const Facet*> facets_with(FacetTag tag) const;
  bool has_tag(FacetTag tag) const;
};

/// Pairing of Gamma_+ and Gamma_- vertices in equal-x columns.
struct InterfaceMap {
  std::vector<int> plus_vertex_order;   // Gamma_+ vertices sorted by x
  std::vector<int> minus_vertex_order;  // Gamma_- vertices sorted by x
  std::vector<int> plus_to_minus;       // indexed by position in plus_vertex_order
  std::vector<int> minus_to_plus;       // indexed by position in minus_vertex_order
};

GluedMesh build_glued_mesh(const RunConfig& cfg);
InterfaceMap build_interface_map(const GluedMesh& mesh);

/// Total length of the edges carrying `tag`. Interface edges are counted once.
double facet_measure(const GluedMesh& mesh, FacetTag tag);

/// Largest diameter-to-inscribed-diameter ratio over triangles of `d`.
double shape_regularity(const GluedMesh& mesh, Subdomain d);

/// Signed area of triangle `k` (positive for counter-clockwise vertices).
double triangle_area(const GluedMesh& mesh, int k);

}  // namespace fpsi
