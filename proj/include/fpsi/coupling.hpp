#pragma once

#include "fpsi/fem.hpp"

#include <vector>

namespace fpsi {

/// Per-column integration weights for plate P1 fields. For column c,
/// plain[c] and weighted[c] are dotted with the plate values ordered by y.
struct ColumnQuadrature {
  std::vector<std::vector<int>> dofs;  // plate dofs per column, bottom to top
  std::vector<Eigen::VectorXd> plain;     // (1/H) int q dz
  std::vector<Eigen::VectorXd> weighted;  // (1/H) int (z + H/2) q dz
};

/// Requires every plate vertex to sit on a column; throws otherwise.
ColumnQuadrature build_column_quadrature(const Discretization& d);

/// Constant-in-z lift of a Gamma_+ line field into plate dofs.
Eigen::VectorXd extend(const Discretization& d, const Eigen::VectorXd& line);

/// Through-thickness average of a plate field, optionally weighted by (z + H/2).
Eigen::VectorXd column_average(const ColumnQuadrature& cq, const Eigen::VectorXd& plate_field,
                               bool weighted);

/// Values indexed by InterfaceMap::minus_vertex_order, reordered to
/// plus_vertex_order (and back).
Eigen::VectorXd transfer_minus_to_plus(const InterfaceMap& im, const Eigen::VectorXd& minus);
Eigen::VectorXd transfer_plus_to_minus(const InterfaceMap& im, const Eigen::VectorXd& plus);

}  // namespace fpsi
