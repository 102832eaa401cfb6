#include "fpsi/mesh.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>
#include <stdexcept>

namespace fpsi {

namespace {

const std::vector<std::pair<FacetTag, const char*>>& tag_names() {
  static const std::vector<std::pair<FacetTag, const char*>> names = {
      {FacetTag::GammaPlus, "GammaPlus"},         {FacetTag::GammaMinus, "GammaMinus"},
      {FacetTag::GammaB_top, "GammaB_top"},       {FacetTag::GammaB_side, "GammaB_side"},
      {FacetTag::GammaF_bottom, "GammaF_bottom"}, {FacetTag::GammaF_side, "GammaF_side"},
      {FacetTag::GammaP_side, "GammaP_side"},     {FacetTag::GammaIn, "GammaIn"},
      {FacetTag::GammaOut, "GammaOut"},           {FacetTag::GammaSym, "GammaSym"},
      {FacetTag::GammaDr, "GammaDr"},             {FacetTag::GammaIm, "GammaIm"},
  };
  return names;
}

double grid_coord(double lo, double hi, int i, int n) {
  if (i == 0) return lo;
  if (i == n) return hi;
  return lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(n);
}

}  // namespace

std::string to_string(FacetTag tag) {
  for (const auto& [t, name] : tag_names())
    if (t == tag) return name;
  return "?";
}

FacetTag facet_tag_from_string(const std::string& s) {
  for (const auto& [t, name] : tag_names())
    if (s == name) return t;
  throw std::invalid_argument("unknown facet tag '" + s + "'");
}

std::vector<int> GluedMesh::triangles_in(Subdomain d) const {
  std::vector<int> out;
  for (int k = 0; k < num_triangles(); ++k)
    if (triangle_domain[k] == d) out.push_back(k);
  return out;
}

std::vector<const Facet*> GluedMesh::facets_with(FacetTag tag) const {
  std::vector<const Facet*> out;
  for (const auto& f : facets)
    if (f.tag == tag) out.push_back(&f);
  return out;
}

bool GluedMesh::has_tag(FacetTag tag) const {
  return std::any_of(facets.begin(), facets.end(), [&](const Facet& f) { return f.tag == tag; });
}

GluedMesh build_glued_mesh(const RunConfig& cfg) {
  validate_run_config(cfg);
  const auto& g = cfg.geometry;
  const auto& r = cfg.mesh;

  GluedMesh m;
  m.boundary_case = cfg.boundary_case;
  m.nx = r.nx_thick;
  m.ny_thick = r.ny_thick;
  m.ny_plate = r.ny_plate;
  m.ny_fluid = r.ny_fluid;
  m.row_minus = r.ny_fluid;
  m.row_plus = r.ny_fluid + r.ny_plate;
  m.row_top = m.row_plus + r.ny_thick;
  m.length = g.length;
  m.thick_height = g.thick_height;
  m.plate_thickness = g.plate_thickness;
  m.fluid_height = g.fluid_height;

  const double H = g.plate_thickness;
  const int nx = m.nx;
  m.xgrid.resize(nx + 1);
  for (int c = 0; c <= nx; ++c) m.xgrid[c] = grid_coord(0.0, g.length, c, nx);

  std::vector<double> ygrid(m.row_top + 1);
  for (int i = 0; i <= r.ny_fluid; ++i)
    ygrid[i] = grid_coord(-H - g.fluid_height, -H, i, r.ny_fluid);
  for (int j = 0; j <= r.ny_plate; ++j)
    ygrid[m.row_minus + j] = grid_coord(-H, 0.0, j, r.ny_plate);
  for (int k = 0; k <= r.ny_thick; ++k)
    ygrid[m.row_plus + k] = grid_coord(0.0, g.thick_height, k, r.ny_thick);

  m.vertices.resize(2, (m.row_top + 1) * (nx + 1));
  for (int row = 0; row <= m.row_top; ++row)
    for (int c = 0; c <= nx; ++c) m.vertices.col(m.vertex(row, c)) << m.xgrid[c], ygrid[row];

  auto domain_of_row = [&](int row) {
    if (row < m.row_minus) return Subdomain::F;
    if (row < m.row_plus) return Subdomain::P;
    return Subdomain::B;
  };

  m.triangles.reserve(2 * nx * m.row_top);
  for (int row = 0; row < m.row_top; ++row) {
    const Subdomain d = domain_of_row(row);
    for (int c = 0; c < nx; ++c) {
      const int v00 = m.vertex(row, c), v10 = m.vertex(row, c + 1);
      const int v01 = m.vertex(row + 1, c), v11 = m.vertex(row + 1, c + 1);
      m.triangles.push_back({v00, v10, v11});
      m.triangles.push_back({v00, v11, v01});
      m.triangle_domain.push_back(d);
      m.triangle_domain.push_back(d);
    }
  }

  const bool vessel = cfg.boundary_case == BoundaryCase::Vessel;
  auto lower_tri = [&](int row, int c) { return 2 * (row * nx + c); };
  auto upper_tri = [&](int row, int c) { return 2 * (row * nx + c) + 1; };

  auto add_row_facets = [&](int row, int cell_row, bool below_is_owner, FacetTag tag, Subdomain d) {
    for (int c = 0; c < nx; ++c) {
      const int tri = below_is_owner ? upper_tri(cell_row, c) : lower_tri(cell_row, c);
      m.facets.push_back({{m.vertex(row, c), m.vertex(row, c + 1)}, tag, d, tri});
    }
  };
  auto add_side_facets = [&](int row0, int row1, FacetTag left, FacetTag right, Subdomain d) {
    for (int row = row0; row < row1; ++row) {
      m.facets.push_back({{m.vertex(row, 0), m.vertex(row + 1, 0)}, left, d, upper_tri(row, 0)});
      m.facets.push_back(
          {{m.vertex(row, nx), m.vertex(row + 1, nx)}, right, d, lower_tri(row, nx - 1)});
    }
  };

  // fluid bottom, sides and Gamma_- (fluid side)
  add_row_facets(0, 0, false, vessel ? FacetTag::GammaSym : FacetTag::GammaF_bottom, Subdomain::F);
  add_side_facets(0, m.row_minus, vessel ? FacetTag::GammaIn : FacetTag::GammaF_side,
                  vessel ? FacetTag::GammaOut : FacetTag::GammaF_side, Subdomain::F);
  add_row_facets(m.row_minus, m.row_minus - 1, true, FacetTag::GammaMinus, Subdomain::F);
  // plate
  add_row_facets(m.row_minus, m.row_minus, false, FacetTag::GammaMinus, Subdomain::P);
  add_side_facets(m.row_minus, m.row_plus, FacetTag::GammaP_side, FacetTag::GammaP_side,
                  Subdomain::P);
  add_row_facets(m.row_plus, m.row_plus - 1, true, FacetTag::GammaPlus, Subdomain::P);
  // thick layer
  add_row_facets(m.row_plus, m.row_plus, false, FacetTag::GammaPlus, Subdomain::B);
  add_side_facets(m.row_plus, m.row_top, vessel ? FacetTag::GammaIm : FacetTag::GammaB_side,
                  vessel ? FacetTag::GammaIm : FacetTag::GammaB_side, Subdomain::B);
  add_row_facets(m.row_top, m.row_top - 1, true, vessel ? FacetTag::GammaDr : FacetTag::GammaB_top,
                 Subdomain::B);

  m.columns.resize(nx + 1);
  for (int c = 0; c <= nx; ++c)
    for (int row = m.row_minus; row <= m.row_plus; ++row) m.columns[c].push_back(m.vertex(row, c));
  return m;
}

InterfaceMap build_interface_map(const GluedMesh& mesh) {
  auto sorted_vertices = [&](FacetTag tag) {
    std::set<int> vs;
    for (const Facet* f : mesh.facets_with(tag)) {
      vs.insert(f->v[0]);
      vs.insert(f->v[1]);
    }
    std::vector<int> out(vs.begin(), vs.end());
    std::stable_sort(out.begin(), out.end(), [&](int a, int b) {
      return mesh.vertices(0, a) < mesh.vertices(0, b);
    });
    return out;
  };
  InterfaceMap im;
  im.plus_vertex_order = sorted_vertices(FacetTag::GammaPlus);
  im.minus_vertex_order = sorted_vertices(FacetTag::GammaMinus);
  if (im.plus_vertex_order.size() != im.minus_vertex_order.size())
    throw std::runtime_error("interface vertex counts differ; mesh is not column aligned");
  const std::size_t n = im.plus_vertex_order.size();
  im.plus_to_minus.resize(n);
  im.minus_to_plus.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double xp = mesh.vertices(0, im.plus_vertex_order[i]);
    const double xm = mesh.vertices(0, im.minus_vertex_order[i]);
    if (xp != xm) throw std::runtime_error("interface vertices are not vertically aligned");
    im.plus_to_minus[i] = static_cast<int>(i);
    im.minus_to_plus[i] = static_cast<int>(i);
  }
  return im;
}

double facet_measure(const GluedMesh& mesh, FacetTag tag) {
  std::set<std::pair<int, int>> seen;
  double total = 0.0;
  bool any = false;
  for (const auto& f : mesh.facets) {
    if (f.tag != tag) continue;
    any = true;
    const auto key = std::minmax(f.v[0], f.v[1]);
    if (!seen.insert(key).second) continue;
    total += (mesh.vertices.col(f.v[1]) - mesh.vertices.col(f.v[0])).norm();
  }
  if (!any) throw std::invalid_argument("no facets tagged " + to_string(tag));
  return total;
}

double triangle_area(const GluedMesh& mesh, int k) {
  const auto& t = mesh.triangles[k];
  const Eigen::Vector2d a = mesh.vertices.col(t[1]) - mesh.vertices.col(t[0]);
  const Eigen::Vector2d b = mesh.vertices.col(t[2]) - mesh.vertices.col(t[0]);
  return 0.5 * (a.x() * b.y() - a.y() * b.x());
}

double shape_regularity(const GluedMesh& mesh, Subdomain d) {
  double worst = 0.0;
  for (int k : mesh.triangles_in(d)) {
    const auto& t = mesh.triangles[k];
    const double a = (mesh.vertices.col(t[1]) - mesh.vertices.col(t[2])).norm();
    const double b = (mesh.vertices.col(t[0]) - mesh.vertices.col(t[2])).norm();
    const double c = (mesh.vertices.col(t[0]) - mesh.vertices.col(t[1])).norm();
    const double diam = std::max({a, b, c});
    const double inradius = 2.0 * triangle_area(mesh, k) / (a + b + c);
    worst = std::max(worst, diam / (2.0 * inradius));
  }
  return worst;
}

}  // namespace fpsi
