#pragma once

#include <string>
#include <vector>

#include "superflow/catalog_groups.hpp"
#include "superflow/ratvf.hpp"

namespace superflow {

enum class SuperflowName { T_hat, O, I, P3, A4 };

SuperflowName parse_superflow_name(const std::string& text);
std::string to_string(SuperflowName name);
std::vector<SuperflowName> all_superflows();

struct Superflow {
  SuperflowName name;
  RationalVF<Golden> field;
  GroupSpec group_spec;
  CatalogGroup group;
  std::vector<MultiPoly<Golden>> first_integrals;
  std::vector<std::string> integral_labels;
  /// Arithmetic genus of the generic orbit (recorded, not computed).
  int genus_metadata = 0;
  /// Whether orbits stay on the unit sphere (first integral x^2+y^2+z^2).
  bool spherical = false;
};

/// Builds the field, its group and first integrals, then checks invariance
/// under the whole group and exact vanishing of every Lie derivative.
/// Throws VerificationFailure if a check fails.
Superflow build_superflow(SuperflowName name);

RationalVF<Golden> icosahedral_field();
RationalVF<Golden> tetrahedral_field();
RationalVF<Golden> octahedral_field();
RationalVF<Golden> prism_field();
RationalVF<Golden> antiprism_field();

MultiPoly<Golden> sphere_integral();     // W = x^2 + y^2 + z^2
MultiPoly<Golden> icosahedral_integral();  // V = (phi^2 x^2 - y^2)(phi^2 y^2 - z^2)(phi^2 z^2 - x^2)

/// The matrix delta with entries 1 -+ sqrt3, over Q(zeta_24).
ExactMatrix<Cyclotomic> prism_delta_matrix();
/// delta^-1 P3(delta x); expected to equal -4(x^2-2xy), -4(y^2-2xy), 0.
RationalVF<Cyclotomic> prism_delta_conjugate();
RationalVF<Cyclotomic> prism_delta_target();

/// Invariance of a golden field under a catalog group of either scalar type.
bool field_invariant_under(const RationalVF<Golden>& v, const CatalogGroup& group);

}  // namespace superflow
