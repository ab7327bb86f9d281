#pragma once

#include <string>
#include <variant>
#include <vector>

#include "superflow/group.hpp"

namespace superflow {

enum class GroupFamily {
  cyclic,             // C_d
  cyclic_pm,          // C_d x {I,-I}
  mixed_cyclic,       // C_2d C_d
  dihedral,           // D_d, rotations
  dihedral_pm,        // D_d x {I,-I}
  dihedral_split,     // D_d C_d, third coordinate split
  tetrahedral,        // T
  tetrahedral_pm,     // T x {I,-I}
  tetrahedral_full,   // S_4 A_4 (T hat)
  octahedral,         // O
  octahedral_pm,      // O x {I,-I}
  icosahedral,        // I
  icosahedral_pm,     // I x {I,-I}
  prism,              // D_2l D_l, l odd
  antiprism,          // D_2l D_l, l even
  symmetric_rep,      // S_{n+1} in dimension n
  symmetric_rep_z2,   // S_{n+1} + Z_2 in dimension n+1
};

struct GroupSpec {
  GroupFamily family = GroupFamily::icosahedral;
  int parameter = 0;
  /// Conjugate by tau so the planar rotation becomes diagonal (complex form).
  bool diagonal = false;
};

/// Accepts "I", "I_pm", "T", "T_pm", "T_hat", "O", "O_pm", "C:d", "C_pm:d",
/// "C2dCd:d", "D:d", "D_pm:d", "DdCd:d", "prism:l", "antiprism:l", "S:n",
/// "S_Z2:n", each optionally followed by "/diag".
GroupSpec parse_group_spec(const std::string& text);
std::string to_string(const GroupSpec& spec);

bool is_parametric(GroupFamily f);
bool uses_golden_scalars(const GroupSpec& spec);
/// Order N of the cyclotomic field holding the generators.
int cyclotomic_order(const GroupSpec& spec);
int expected_order(const GroupSpec& spec);
int expected_dimension(const GroupSpec& spec);
/// Human label: rotation, direct product, mixed or symmetric representation.
std::string family_kind(GroupFamily f);

using CatalogGroup = std::variant<MatrixGroup<Golden>, MatrixGroup<Cyclotomic>>;

/// Builds generators, closes the group and checks the expected order.
/// Throws VerificationFailure on an order mismatch.
CatalogGroup build_catalog_group(const GroupSpec& spec);

/// Every spec the catalog command lists, with small parameters.
std::vector<GroupSpec> default_catalog_specs();

/// The generators alpha, beta, gamma of the icosahedral rotation group.
std::vector<ExactMatrix<Golden>> icosahedral_generators();

/// The coordinate swap x <-> y with z fixed.
template <class S>
ExactMatrix<S> swap_xy();

/// tau = (1/sqrt2)[[1, i], [i, 1]] + [1]; needs 8 | N.
ExactMatrix<Cyclotomic> tau_matrix(const CyclotomicFieldPtr& field);

/// Rotation by pi p / q in the xy-plane with the given z entry.
ExactMatrix<Cyclotomic> planar_rotation(const CyclotomicFieldPtr& field, long p, long q, int z_entry);

/// Permutation matrices of S_n plus kappa: the n-dimensional S_{n+1} representation.
std::vector<ExactMatrix<Golden>> symmetric_rep_generators(int n);

}  // namespace superflow
