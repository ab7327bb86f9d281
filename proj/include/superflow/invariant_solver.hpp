#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "superflow/catalog_groups.hpp"
#include "superflow/ratvf.hpp"

namespace superflow {

/// All monomials of the given total degree, in canonical order.
template <class S>
std::vector<MultiPoly<S>> monomials_of_degree(const VarList& vars, int degree);

/// Relative invariants of one character: D(g x) = chi(g) D(x) for each generator g.
template <class S>
struct RelativeInvariants {
  std::vector<S> character;  // one value per generator
  std::vector<MultiPoly<S>> basis;
};

/// Splits the degree-k polynomials into simultaneous eigenspaces of the
/// generators (acting by p -> p o g), keeping only the nonzero ones.
template <class S>
std::vector<RelativeInvariants<S>> relative_invariants(const MatrixGroup<S>& g, int degree);

/// Numerators N of degree k + 2 with g^-1 N(g x) = chi(g) N(x) per generator.
template <class S>
std::vector<std::vector<MultiPoly<S>>> numerator_space(const MatrixGroup<S>& g, const std::vector<S>& character,
                                                       int numerator_degree);

template <class S>
struct InvariantSpace {
  int dimension = 0;
  std::vector<RationalVF<S>> basis;
  MultiPoly<S> denominator;
  int denominator_degree = 0;
  std::string group_tag;
  std::vector<S> character;
};

/// Exact space of fields N / denominator invariant under conjugation by G.
/// Throws InvalidArgument when the denominator is zero, inhomogeneous or not
/// a relative invariant; VerificationFailure if the full-group post-check fails.
template <class S>
InvariantSpace<S> solve_invariant_space(const MatrixGroup<S>& g, const MultiPoly<S>& denominator,
                                        bool check_full_group = true);

/// Invariance of V under every element of G (not just generators).
template <class S>
bool is_invariant_under_group(const RationalVF<S>& v, const MatrixGroup<S>& g);

template <class S>
struct CharacterBlock {
  std::vector<S> character;
  std::vector<MultiPoly<S>> denominators;       // relative invariants, dimension e
  std::vector<std::vector<MultiPoly<S>>> numerators;  // dimension n
  /// n + e - 1 when n > 0: the fields N / D up to a common scale.
  int family_dimension() const {
    return numerators.empty() ? 0 : static_cast<int>(numerators.size() + denominators.size()) - 1;
  }
};

template <class S>
struct DegreeReport {
  int degree = 0;
  std::vector<CharacterBlock<S>> blocks;
  int family_dimension() const {
    int d = 0;
    for (const auto& b : blocks) d += b.family_dimension();
    return d;
  }
};

/// All invariant fields whose denominator has the given degree.
template <class S>
DegreeReport<S> solve_invariant_family(const MatrixGroup<S>& g, int denominator_degree);

enum class VerdictReason { unique_field, contains_minus_I, family_dimension_gt_1, zero_only, symmetry_extends };

std::string to_string(VerdictReason r);

template <class S>
struct SuperflowVerdict {
  bool exists = false;
  VerdictReason reason = VerdictReason::zero_only;
  std::optional<RationalVF<S>> witness;
  int degree = -1;
  int family_dimension = 0;
  std::vector<DegreeReport<S>> sweep;
  /// For symmetry_extends: a signed permutation outside G fixing the witness.
  std::optional<ExactMatrix<S>> extra_symmetry;
};

/// Extra symmetries are searched among signed permutations. When G was
/// conjugated into other coordinates (G' = F G F^-1), pass F so the candidates
/// are conjugated the same way.
template <class S>
SuperflowVerdict<S> superflow_verdict(const MatrixGroup<S>& g, int max_denominator_degree,
                                      const std::optional<ExactMatrix<S>>& frame = std::nullopt);

using CatalogVerdict = std::variant<SuperflowVerdict<Golden>, SuperflowVerdict<Cyclotomic>>;

/// Verdict for a catalog group, supplying the diagonalizing frame for /diag specs.
CatalogVerdict catalog_verdict(const GroupSpec& spec, int max_denominator_degree);

struct PropExtReport {
  int n = 0;
  int ambient_dimension = 0;
  int group_order = 0;
  /// Kernel of the constrained ansatz t Q + a (x^2, ..., 0) + b (0, ..., x Sum x_j).
  int constrained_dimension = 0;
  bool a_b_eliminated = false;
  /// Unconstrained solve over all quadratic fields.
  int unconstrained_dimension = 0;
  bool matches_q_hat = false;
  bool q_invariant_under_base = false;
  bool passed() const {
    return constrained_dimension == 1 && a_b_eliminated && unconstrained_dimension == 1 && matches_q_hat &&
           q_invariant_under_base;
  }
};

/// The quadratic field Q of dimension n with Q_1 = x1^2 - 2/(n-1) x1 (x2 + ... + xn).
RationalVF<Golden> symmetric_q_field(int n);

PropExtReport verify_prop_ext(int n);

#define SUPERFLOW_SOLVER_EXTERN(S)                                                                         \
  extern template std::vector<MultiPoly<S>> monomials_of_degree(const VarList&, int);                      \
  extern template std::vector<RelativeInvariants<S>> relative_invariants(const MatrixGroup<S>&, int);      \
  extern template std::vector<std::vector<MultiPoly<S>>> numerator_space(const MatrixGroup<S>&,           \
                                                                          const std::vector<S>&, int);     \
  extern template InvariantSpace<S> solve_invariant_space(const MatrixGroup<S>&, const MultiPoly<S>&, bool); \
  extern template bool is_invariant_under_group(const RationalVF<S>&, const MatrixGroup<S>&);             \
  extern template DegreeReport<S> solve_invariant_family(const MatrixGroup<S>&, int);                       \
  extern template SuperflowVerdict<S> superflow_verdict(const MatrixGroup<S>&, int,                  \
                                                              const std::optional<ExactMatrix<S>>&);
SUPERFLOW_SOLVER_EXTERN(Golden)
SUPERFLOW_SOLVER_EXTERN(Cyclotomic)
#undef SUPERFLOW_SOLVER_EXTERN

}  // namespace superflow
