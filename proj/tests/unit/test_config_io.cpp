#include "fpsi/io.hpp"
#include "fpsi/mms.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <filesystem>
#include <sstream>

using namespace fpsi;

namespace {

AppConfig parse(const std::string& text) {
  std::istringstream is(text);
  return parse_config(is);
}

std::string config_path(const char* name) { return std::string(FPSI_CONFIG_DIR) + "/" + name; }

}  // namespace

TEST(Config, DefaultsRoundTrip) {
  AppConfig c;
  std::ostringstream os;
  write_config(os, c);
  EXPECT_TRUE(parse(os.str()) == c);
}

TEST(Config, ShippedConfigsRoundTrip) {
  for (const char* name : {"mms.cfg", "vessel.cfg"}) {
    const auto c = load_config(config_path(name));
    EXPECT_NO_THROW(validate_config(c)) << name;
    std::ostringstream os;
    write_config(os, c);
    EXPECT_TRUE(parse(os.str()) == c) << name;
  }
}

TEST(Config, AwkwardDoublesSurvive) {
  AppConfig c;
  c.run.dt = 0.1 + 0.2;
  c.params.bendD = 596573.8636363636;
  c.params.kappa << 1.0 / 3.0, 1e-17, 1e-17, 2.0;
  c.verification.time_dts = {1.0 / 7.0, 0.02};
  std::ostringstream os;
  write_config(os, c);
  const auto back = parse(os.str());
  EXPECT_EQ(back.run.dt, c.run.dt);
  EXPECT_EQ(back.params.bendD, c.params.bendD);
  EXPECT_EQ(back.params.kappa, c.params.kappa);
  EXPECT_EQ(back.verification.time_dts, c.verification.time_dts);
}

TEST(Config, VesselFileMatchesBuiltInParameters) {
  const auto c = load_config(config_path("vessel.cfg"));
  const auto ref = PhysicalParams::vessel(0.05);
  EXPECT_EQ(c.run.boundary_case, BoundaryCase::Vessel);
  EXPECT_DOUBLE_EQ(c.params.bendD, ref.bendD);
  EXPECT_DOUBLE_EQ(c.params.mu_f, ref.mu_f);
  EXPECT_EQ(c.run.mesh.nx_fluid, 300);
  const auto vc = vessel_case(c);
  EXPECT_EQ(vc.H, 0.05);
  EXPECT_EQ(vc.inflow.P_max, 13333.0);
}

TEST(Config, Errors) {
  EXPECT_THROW(parse("[run]\nbogus = 1\n"), ConfigError);
  EXPECT_THROW(parse("[nowhere]\ndt = 1\n"), ConfigError);
  EXPECT_THROW(parse("dt = 1\n"), ConfigError);
  EXPECT_THROW(parse("[run]\ndt = fast\n"), ConfigError);
  try {
    load_config("/nonexistent/x.cfg");
    FAIL();
  } catch (const ConfigError& e) {
    EXPECT_NE(std::string(e.what()).find("/nonexistent/x.cfg"), std::string::npos);
  }
}

TEST(Config, CommentsAndPartialFiles) {
  const auto c = parse("# leading\n[run]\n; between keys\ndt = 0.01\nt_final = 0.5\n[mesh]\nnx = 7\n");
  EXPECT_EQ(c.run.dt, 0.01);
  EXPECT_EQ(c.run.mesh.nx_thick, 7);
  EXPECT_EQ(c.run.mesh.nx_fluid, 7);
  EXPECT_EQ(c.params.rho_b, PhysicalParams{}.rho_b);
}

TEST(Config, Overrides) {
  AppConfig c;
  apply_override(c, "geometry.plate_thickness=0.025");
  EXPECT_EQ(c.run.geometry.plate_thickness, 0.025);
  EXPECT_EQ(c.params.H, 0.025);
  apply_override(c, "verification.space_levels=10,20,40");
  EXPECT_EQ(c.verification.space_levels, (std::vector<int>{10, 20, 40}));
  EXPECT_THROW(apply_override(c, "run.dt"), ConfigError);
  EXPECT_THROW(apply_override(c, "run.nothing=1"), ConfigError);
}

TEST(Config, ValidationCatchesParameters) {
  AppConfig c;
  c.params.kappa(1, 1) = -1.0;
  EXPECT_THROW(validate_config(c), ConfigError);
}

TEST(Config, ManifestParsesBack) {
  AppConfig c;
  c.run.dt = 0.02;
  c.run.t_final = 0.2;
  std::ostringstream os;
  write_manifest(os, c, "run-mms", {{"jobs", "2"}});
  EXPECT_NE(os.str().find("[command]\nname = run-mms\njobs = 2\n"), std::string::npos);
  EXPECT_TRUE(parse(os.str()) == c);
}

TEST(Io, CsvFormat) {
  EXPECT_EQ(format_csv(1.0), "1.00000000e+00");
  EXPECT_EQ(format_csv(-0.00123456789), "-1.23456789e-03");
  std::ostringstream os;
  write_profile_csv(os, {0.0, 0.5}, Eigen::Vector2d(1.0, 2.0));
  EXPECT_EQ(os.str(), "x,w\n0.00000000e+00,1.00000000e+00\n5.00000000e-01,2.00000000e+00\n");
}

TEST(Io, FluidVtk) {
  const auto d = build_discretization(mms_run_config(2, 1e-3, 0.1));
  StateVector s;
  s.pi = Eigen::VectorXd::Zero(d.fluid.num_dofs());
  s.u = Eigen::Matrix2Xd::Zero(2, d.fluid2.num_dofs());
  std::ostringstream os;
  write_fluid_vtk(os, d, s);
  const auto text = os.str();
  EXPECT_EQ(text.rfind("# vtk DataFile Version 2.0\n", 0), 0u);
  EXPECT_NE(text.find("POINTS 9 double"), std::string::npos);
  EXPECT_NE(text.find("CELLS 8 32"), std::string::npos);
  EXPECT_NE(text.find("SCALARS pi double 1"), std::string::npos);
  EXPECT_NE(text.find("SCALARS speed double 1"), std::string::npos);
}

TEST(Io, HSweepTables) {
  HSweep sw;
  sw.H = {0.05, 0.025};
  sw.x = {0.0, 1.0};
  sw.w_star = {Eigen::Vector2d(1, 2), Eigen::Vector2d(3, 4)};
  sw.amplitudes = {0.5, 0.5};
  sw.extrema = {0, 0};
  sw.differences = {2.0};
  std::ostringstream a, b;
  write_h_sweep_csv(a, sw);
  write_h_sweep_profiles_csv(b, sw);
  const std::string head = a.str(), wide = b.str();
  EXPECT_EQ(head.substr(0, head.find('\n')), "H,amplitude,extrema,diff_next");
  EXPECT_EQ(std::count(wide.begin(), wide.end(), '\n'), 3);
}

TEST(Io, OutputDirectory) {
  const auto dir = (std::filesystem::temp_directory_path() / "fpsi_io_test" / "nested").string();
  std::filesystem::remove_all(dir);
  ensure_directory(dir);
  { auto os = open_output(dir, "a.csv"); os << "x\n"; }
  EXPECT_TRUE(std::filesystem::exists(dir + "/a.csv"));
  std::filesystem::remove_all(std::filesystem::path(dir).parent_path());
}
