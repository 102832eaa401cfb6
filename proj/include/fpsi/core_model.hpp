#pragma once

#include <Eigen/Dense>

#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

namespace fpsi {

using ScalarField = std::function<double(double x, double y, double t)>;
using VectorField = std::function<Eigen::Vector2d(double x, double y, double t)>;

/// Raised for invalid user input (configuration, parameters, geometry).
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Material and coupling constants in CGS units.
///
/// Thick Biot layer: rho_b, mu_b, lambda_b, c0, alpha, kappa, gamma.
/// Poroelastic plate: rho_p, c0_p, alpha_p, kappa_p, bendD, gamma_p, H.
/// Stokes fluid: rho_f, mu_f. Interface: beta (slip), gamma_pen (penalty).
struct PhysicalParams {
  double rho_b = 1.0;
  double mu_b = 1.0;
  double lambda_b = 1.0;
  double c0 = 1.0;
  double alpha = 1.0;
  Eigen::Matrix2d kappa = Eigen::Matrix2d::Identity();
  double gamma = 0.0;

  double rho_p = 1.0;
  double c0_p = 1.0;
  double alpha_p = 1.0;
  double kappa_p = 1.0;
  double bendD = 1.0;
  double gamma_p = 0.0;
  double H = 1.0;

  double rho_f = 1.0;
  double mu_f = 1.0;
  double beta = 1.0;
  double gamma_pen = 0.0;

  /// Smallest eigenvalue of kappa.
  double k_min() const;

  /// Unit constants with the spring and penalty coefficients switched off.
  static PhysicalParams unit();

  /// Physiological vessel set with plate thickness `H`.
  static PhysicalParams vessel(double H);
};

/// Plate bending stiffness derived from the Lame coefficients of the wall.
double plate_bending_stiffness(double mu_b, double lambda_b);

struct ParamViolation {
  std::string field;
  std::string predicate;
};

std::vector<ParamViolation> validate_params(const PhysicalParams& p);

/// `thick` is alpha^2 < c0 lambda_b, `plate` is alpha_p^2 < 12 c0_p bendD.
struct ParameterConditions {
  bool thick = false;
  bool plate = false;
};

ParameterConditions check_parameter_conditions(const PhysicalParams& p);

/// Body and interface forcing. An empty callable is the zero field.
struct ForcingSpec {
  VectorField F_b;  // thick layer momentum
  ScalarField G_b;  // thick layer mass
  ScalarField F_p;  // plate load on the interface line (evaluated at y = 0)
  ScalarField G_p;  // plate mass
  VectorField F_f;  // fluid momentum

  bool isolated() const { return !F_b && !G_b && !F_p && !G_p && !F_f; }
};

enum class BoundaryCase { Mms, Vessel };

std::string to_string(BoundaryCase c);
BoundaryCase boundary_case_from_string(const std::string& s);

/// Rectangular subdomain extents. `plate_thickness` must equal PhysicalParams::H.
struct Geometry {
  double length = 1.0;
  double thick_height = 1.0;     // R_b
  double plate_thickness = 1.0;  // H
  double fluid_height = 1.0;     // R_f
};

/// Cell counts. Each subdomain carries its own horizontal count so that a
/// mismatched x-grid can be detected and rejected.
struct MeshResolution {
  int nx_thick = 10;
  int nx_plate = 10;
  int nx_fluid = 10;
  int ny_thick = 10;
  int ny_plate = 10;
  int ny_fluid = 10;

  static MeshResolution uniform(int nx, int ny_thick, int ny_plate, int ny_fluid);
};

struct RunConfig {
  Geometry geometry;
  MeshResolution mesh;
  double dt = 1e-3;
  double t_final = 0.1;
  double d_h = 0.1;  // interface mesh scale used by the penalty
  BoundaryCase boundary_case = BoundaryCase::Mms;
  std::string output_dir = "output";
  int output_every = 1;

  int num_steps() const;
};

/// Throws ConfigError when the run configuration is unusable.
void validate_run_config(const RunConfig& cfg);

/// Discrete solution at one time level. Layouts follow fpsi::Discretization:
/// thick-layer fields are indexed by thick P1 dofs, plate fields by plate P1
/// dofs, interface fields by column (x-ordered Gamma_+ vertices), u by fluid
/// P2 nodes and pi by fluid P1 dofs.
struct StateVector {
  Eigen::Matrix2Xd eta;
  Eigen::Matrix2Xd xi;
  Eigen::VectorXd p;
  Eigen::Matrix2Xd u_b;
  Eigen::VectorXd w;
  Eigen::VectorXd v;
  Eigen::VectorXd Lam;
  Eigen::VectorXd q;
  Eigen::VectorXd u_p;
  Eigen::Matrix2Xd u;
  Eigen::VectorXd pi;
  double t = 0.0;
};

}  // namespace fpsi
