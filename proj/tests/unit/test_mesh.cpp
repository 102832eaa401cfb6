#include "fpsi/mesh.hpp"
#include "fpsi/mms.hpp"
#include "fpsi/vessel.hpp"

#include <gtest/gtest.h>

#include <set>

using namespace fpsi;

namespace {

RunConfig unit_config(int n) { return mms_run_config(n, 1e-3, 0.1); }

}  // namespace

TEST(Mesh, SingleSquareCounts) {
  auto cfg = unit_config(2);
  const auto m = build_glued_mesh(cfg);
  EXPECT_EQ(m.triangles_in(Subdomain::B).size(), 8u);
  EXPECT_EQ(m.triangles_in(Subdomain::P).size(), 8u);
  EXPECT_EQ(m.triangles_in(Subdomain::F).size(), 8u);
  std::set<int> thick;
  for (int k : m.triangles_in(Subdomain::B))
    for (int v : m.triangles[k]) thick.insert(v);
  EXPECT_EQ(thick.size(), 9u);
}

TEST(Mesh, MmsDomainAtForty) {
  const auto m = build_glued_mesh(unit_config(40));
  EXPECT_EQ(m.num_triangles(), 3 * 3200);
  // interface rows are shared between neighbouring subdomains
  EXPECT_EQ(m.num_vertices(), 41 * 121);
}

TEST(Mesh, LayoutAndOrientation) {
  const auto m = build_glued_mesh(unit_config(4));
  for (int k = 0; k < m.num_triangles(); ++k) {
    EXPECT_GT(triangle_area(m, k), 0.0);
    double ymin = 1e9, ymax = -1e9;
    for (int v : m.triangles[k]) {
      ymin = std::min(ymin, m.vertices(1, v));
      ymax = std::max(ymax, m.vertices(1, v));
    }
    switch (m.triangle_domain[k]) {
      case Subdomain::B: EXPECT_GE(ymin, 0.0); EXPECT_LE(ymax, 1.0); break;
      case Subdomain::P: EXPECT_GE(ymin, -1.0); EXPECT_LE(ymax, 0.0); break;
      case Subdomain::F: EXPECT_GE(ymin, -2.0); EXPECT_LE(ymax, -1.0); break;
    }
  }
}

TEST(Mesh, InterfaceColumnsAlign) {
  const auto m = build_glued_mesh(unit_config(5));
  const auto im = build_interface_map(m);
  ASSERT_EQ(im.plus_vertex_order.size(), 6u);
  for (std::size_t i = 0; i < im.plus_vertex_order.size(); ++i) {
    const int a = im.plus_vertex_order[i], b = im.plus_to_minus[i];
    EXPECT_DOUBLE_EQ(m.vertices(0, a), m.vertices(0, b));
  }
  for (const auto& col : m.columns)
    for (int v : col) EXPECT_DOUBLE_EQ(m.vertices(0, v), m.vertices(0, col.front()));
}

TEST(Mesh, FacetMeasures) {
  const auto m = build_glued_mesh(unit_config(6));
  EXPECT_NEAR(facet_measure(m, FacetTag::GammaPlus), 1.0, 1e-14);
  EXPECT_NEAR(facet_measure(m, FacetTag::GammaMinus), 1.0, 1e-14);

  const auto v = build_glued_mesh(VesselCase::with_thickness(0.05).run_config());
  EXPECT_NEAR(facet_measure(v, FacetTag::GammaMinus), 5.0, 1e-12);
  EXPECT_NEAR(facet_measure(v, FacetTag::GammaIn), 0.5, 1e-12);
  EXPECT_NEAR(facet_measure(v, FacetTag::GammaDr), 5.0, 1e-12);
}

TEST(Mesh, VesselResolutions) {
  const auto v = build_glued_mesh(VesselCase::with_thickness(0.05).run_config());
  EXPECT_EQ(v.triangles_in(Subdomain::F).size(), 2u * 300 * 25);
  EXPECT_EQ(v.triangles_in(Subdomain::B).size(), 2u * 300 * 4);
  EXPECT_EQ(v.triangles_in(Subdomain::P).size(), 2u * 300 * 3);
  EXPECT_TRUE(v.has_tag(FacetTag::GammaSym));
  EXPECT_FALSE(v.has_tag(FacetTag::GammaB_top));
}

TEST(Mesh, MismatchedColumnsRejected) {
  auto cfg = unit_config(4);
  cfg.mesh.nx_fluid = 5;
  EXPECT_THROW(build_glued_mesh(cfg), ConfigError);
}

TEST(Mesh, ShapeRegularity) {
  const auto m = build_glued_mesh(unit_config(8));
  EXPECT_NEAR(shape_regularity(m, Subdomain::B), shape_regularity(m, Subdomain::F), 1e-12);
}

TEST(Mesh, TagNames) {
  EXPECT_EQ(facet_tag_from_string(to_string(FacetTag::GammaIm)), FacetTag::GammaIm);
}
