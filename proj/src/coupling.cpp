#include "fpsi/coupling.hpp"

#include <stdexcept>

namespace fpsi {

ColumnQuadrature build_column_quadrature(const Discretization& d) {
  const auto& m = d.mesh;
  const double H = m.plate_thickness;
  ColumnQuadrature cq;
  std::vector<char> covered(d.plate.num_dofs(), 0);
  for (const auto& column : m.columns) {
    const int n = static_cast<int>(column.size());
    std::vector<int> dofs(n);
    Eigen::VectorXd plain = Eigen::VectorXd::Zero(n), weighted = Eigen::VectorXd::Zero(n);
    const double x0 = m.vertices(0, column.front());
    for (int j = 0; j < n; ++j) {
      if (m.vertices(0, column[j]) != x0) throw std::runtime_error("plate column is not vertical");
      dofs[j] = d.plate.dof(column[j]);
      covered[dofs[j]] = 1;
    }
    for (int j = 0; j + 1 < n; ++j) {
      const double za = m.vertices(1, column[j]), zb = m.vertices(1, column[j + 1]);
      const double len = zb - za;
      const double fa = za + 0.5 * H, fb = zb + 0.5 * H;
      plain(j) += 0.5 * len / H;
      plain(j + 1) += 0.5 * len / H;
      weighted(j) += len / 6.0 * (2.0 * fa + fb) / H;
      weighted(j + 1) += len / 6.0 * (fa + 2.0 * fb) / H;
    }
    cq.dofs.push_back(std::move(dofs));
    cq.plain.push_back(std::move(plain));
    cq.weighted.push_back(std::move(weighted));
  }
  for (char c : covered)
    if (!c) throw std::runtime_error("plate vertex outside every column");
  return cq;
}

Eigen::VectorXd extend(const Discretization& d, const Eigen::VectorXd& line) {
  if (line.size() != d.line_p1()) throw std::invalid_argument("line field has wrong length");
  Eigen::VectorXd out(d.plate.num_dofs());
  for (int c = 0; c < d.line_p1(); ++c)
    for (int v : d.mesh.columns[c]) out(d.plate.dof(v)) = line(c);
  return out;
}

Eigen::VectorXd column_average(const ColumnQuadrature& cq, const Eigen::VectorXd& plate_field,
                               bool weighted) {
  const int n = static_cast<int>(cq.dofs.size());
  Eigen::VectorXd out(n);
  for (int c = 0; c < n; ++c) {
    const auto& w = weighted ? cq.weighted[c] : cq.plain[c];
    double s = 0.0;
    for (int j = 0; j < w.size(); ++j) s += w(j) * plate_field(cq.dofs[c][j]);
    out(c) = s;
  }
  return out;
}

Eigen::VectorXd transfer_minus_to_plus(const InterfaceMap& im, const Eigen::VectorXd& minus) {
  Eigen::VectorXd plus(minus.size());
  for (std::size_t i = 0; i < im.minus_to_plus.size(); ++i) plus(im.minus_to_plus[i]) = minus(i);
  return plus;
}

Eigen::VectorXd transfer_plus_to_minus(const InterfaceMap& im, const Eigen::VectorXd& plus) {
  Eigen::VectorXd minus(plus.size());
  for (std::size_t i = 0; i < im.plus_to_minus.size(); ++i) minus(im.plus_to_minus[i]) = plus(i);
  return minus;
}

}  // namespace fpsi
