#include "fpsi/boundary.hpp"

#include <algorithm>
#include <map>

namespace fpsi {

BoundaryConditions homogeneous_boundary_conditions(BoundaryCase c) {
  BoundaryConditions bc;
  if (c == BoundaryCase::Mms) {
    const std::vector<FacetTag> thick = {FacetTag::GammaB_top, FacetTag::GammaB_side};
    const std::vector<FacetTag> fluid = {FacetTag::GammaF_bottom, FacetTag::GammaF_side};
    bc.dirichlet.push_back({BcField::Pressure, 0, thick, {}});
    bc.dirichlet.push_back({BcField::Displacement, 0, thick, {}});
    bc.dirichlet.push_back({BcField::Displacement, 1, thick, {}});
    bc.dirichlet.push_back({BcField::FluidVelocity, 0, fluid, {}});
    bc.dirichlet.push_back({BcField::FluidVelocity, 1, fluid, {}});
  } else {
    bc.dirichlet.push_back({BcField::Pressure, 0, {FacetTag::GammaDr}, {}});
    bc.dirichlet.push_back({BcField::Displacement, 0, {FacetTag::GammaIm}, {}});
    bc.dirichlet.push_back({BcField::Displacement, 1, {FacetTag::GammaIm}, {}});
    bc.dirichlet.push_back({BcField::DarcyVelocity, 0, {FacetTag::GammaIm}, {}});
    bc.dirichlet.push_back({BcField::FluidVelocity, 1, {FacetTag::GammaSym}, {}});
  }
  return bc;
}

ResolvedDirichlet resolve_dirichlet(const Discretization& d, const BoundaryConditions& bc,
                                    BcField field) {
  std::map<std::pair<int, int>, const DirichletCondition*> chosen;
  for (const auto& cond : bc.dirichlet) {
    if (cond.field != field) continue;
    std::vector<int> dofs;
    switch (field) {
      case BcField::Pressure:
        dofs = band_dofs_on(d, d.pressure, cond.tags);
        break;
      case BcField::DarcyVelocity:
      case BcField::Displacement:
        dofs = band_dofs_on(d, d.thick, cond.tags);
        break;
      case BcField::PlateFlux:
        dofs = band_dofs_on(d, d.plate, cond.tags);
        break;
      case BcField::FluidVelocity:
        dofs = fluid2_dofs_on(d, cond.tags);
        break;
    }
    for (int dof : dofs) chosen[{dof, cond.component}] = &cond;
  }
  ResolvedDirichlet out;
  for (const auto& [key, cond] : chosen) {
    out.dofs.push_back(key.first);
    out.components.push_back(key.second);
    out.source.push_back(cond);
  }
  return out;
}

double evaluate_or_zero(const ScalarField& f, double x, double y, double t) {
  return f ? f(x, y, t) : 0.0;
}

}  // namespace fpsi
