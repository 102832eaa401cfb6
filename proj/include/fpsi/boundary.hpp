#pragma once

#include "fpsi/fem.hpp"

#include <vector>

namespace fpsi {

enum class BcField {
  Pressure,       // p on thick vertices, q on plate vertices (shared at Gamma_+)
  DarcyVelocity,  // u_b
  PlateFlux,      // u_p
  Displacement,   // eta; the structure step converts to xi
  FluidVelocity,  // u
};

/// Essential condition on every dof of `field` (component `component`) that
/// lies on a facet carrying one of `tags`. Later entries win on overlaps.
struct DirichletCondition {
  BcField field;
  int component = 0;
  std::vector<FacetTag> tags;
  ScalarField value;  // empty means zero
};

/// Prescribed traction sigma n on facets carrying `tags`.
struct TractionCondition {
  std::vector<FacetTag> tags;
  VectorField traction;
};

struct BoundaryConditions {
  std::vector<DirichletCondition> dirichlet;
  std::vector<TractionCondition> structure_traction;
  std::vector<TractionCondition> fluid_traction;
};

/// Homogeneous essential conditions matching the default data of each case:
/// MMS geometry clamps p, eta on the outer thick boundary and u on the outer
/// fluid boundary; the vessel case follows its physical boundary list.
BoundaryConditions homogeneous_boundary_conditions(BoundaryCase c);

/// Dofs of every condition on `field`, in the index space of that field
/// (band dofs or fluid P2 nodes), sorted by (dof, component).
struct ResolvedDirichlet {
  std::vector<int> dofs;
  std::vector<int> components;
  std::vector<const DirichletCondition*> source;
};

ResolvedDirichlet resolve_dirichlet(const Discretization& d, const BoundaryConditions& bc,
                                    BcField field);

/// f(x, y, t), or zero for an empty callable.
double evaluate_or_zero(const ScalarField& f, double x, double y, double t);

}  // namespace fpsi
