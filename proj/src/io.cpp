#include "fpsi/io.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <ostream>
#include <stdexcept>

namespace fpsi {

std::string format_csv(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.8e", v);
  return buf;
}

void ensure_directory(const std::string& dir) {
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) throw std::runtime_error("cannot create directory '" + dir + "': " + ec.message());
}

std::ofstream open_output(const std::string& dir, const std::string& name) {
  const auto path = (std::filesystem::path(dir) / name).string();
  std::ofstream os(path);
  if (!os) throw std::runtime_error("cannot write '" + path + "'");
  return os;
}

void write_profile_csv(std::ostream& os, const std::vector<double>& x, const Eigen::VectorXd& w) {
  os << "x,w\n";
  for (std::size_t i = 0; i < x.size(); ++i)
    os << format_csv(x[i]) << ',' << format_csv(w(static_cast<Eigen::Index>(i))) << '\n';
}

void write_fluid_vtk(std::ostream& os, const Discretization& d, const StateVector& s) {
  const auto& m = d.mesh;
  const auto& F = d.fluid;
  const int nv = F.num_dofs();
  os << "# vtk DataFile Version 2.0\nfluid layer t = " << format_csv(s.t)
     << "\nASCII\nDATASET UNSTRUCTURED_GRID\nPOINTS " << nv << " double\n";
  for (int i = 0; i < nv; ++i) {
    const int v = F.vertex(i);
    os << format_csv(m.vertices(0, v)) << ' ' << format_csv(m.vertices(1, v)) << " 0\n";
  }
  const auto nt = d.tris_f.size();
  os << "CELLS " << nt << ' ' << 4 * nt << '\n';
  for (int k : d.tris_f) {
    const auto& t = m.triangles[k];
    os << "3 " << F.dof(t[0]) << ' ' << F.dof(t[1]) << ' ' << F.dof(t[2]) << '\n';
  }
  os << "CELL_TYPES " << nt << '\n';
  for (std::size_t k = 0; k < nt; ++k) os << "5\n";
  os << "POINT_DATA " << nv << "\nSCALARS pi double 1\nLOOKUP_TABLE default\n";
  for (int i = 0; i < nv; ++i) os << format_csv(s.pi(i)) << '\n';
  os << "SCALARS speed double 1\nLOOKUP_TABLE default\n";
  for (int i = 0; i < nv; ++i) {
    const int v = F.vertex(i);
    const int node = d.fluid2.node(2 * m.row_of(v), 2 * m.col_of(v));
    os << format_csv(s.u.col(node).norm()) << '\n';
  }
}

void write_energy_series_csv(std::ostream& os, const EnergySeries& e) {
  os << "t,numeric,exact,relative_deviation\n";
  for (std::size_t k = 0; k < e.t.size(); ++k)
    os << format_csv(e.t[k]) << ',' << format_csv(e.numeric[k]) << ',' << format_csv(e.exact[k])
       << ',' << format_csv(e.relative_deviation(k)) << '\n';
}

void write_h_sweep_csv(std::ostream& os, const HSweep& sw) {
  os << "H,amplitude,extrema,diff_next\n";
  for (std::size_t k = 0; k < sw.H.size(); ++k) {
    os << format_csv(sw.H[k]) << ',' << format_csv(sw.amplitudes[k]) << ',' << sw.extrema[k]
       << ',';
    if (k < sw.differences.size()) os << format_csv(sw.differences[k]);
    os << '\n';
  }
}

void write_h_sweep_profiles_csv(std::ostream& os, const HSweep& sw) {
  os << 'x';
  for (double H : sw.H) os << ",w_H" << format_csv(H);
  os << '\n';
  for (std::size_t i = 0; i < sw.x.size(); ++i) {
    os << format_csv(sw.x[i]);
    for (const auto& w : sw.w_star) os << ',' << format_csv(w(static_cast<Eigen::Index>(i)));
    os << '\n';
  }
}

void write_manifest(std::ostream& os, const AppConfig& c, const std::string& command,
                    const std::vector<std::pair<std::string, std::string>>& entries) {
  write_config(os, c);
  os << "\n[command]\nname = " << command << '\n';
  for (const auto& [k, v] : entries) os << k << " = " << v << '\n';
}

}  // namespace fpsi
