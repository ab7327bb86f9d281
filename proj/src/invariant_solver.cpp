#include "superflow/invariant_solver.hpp"

#include <map>

#include "superflow/errors.hpp"
#include "superflow/linsolve.hpp"

namespace superflow {
namespace {

template <class S>
int element_order(const ExactMatrix<S>& g) {
  ExactMatrix<S> p = g;
  for (int k = 1; k <= kDefaultGroupCap; ++k) {
    if (is_identity<S>(p)) return k;
    p = p * g;
  }
  throw GroupNotFinite("element order exceeds cap");
}

std::vector<Golden> unit_roots(const MatrixGroup<Golden>&, int order) {
  if (order % 2 == 0) return {Golden(1), Golden(-1)};
  return {Golden(1)};
}

CyclotomicFieldPtr group_field(const MatrixGroup<Cyclotomic>& g) {
  for (const auto& e : g.elements)
    for (Eigen::Index i = 0; i < e.rows(); ++i)
      for (Eigen::Index j = 0; j < e.cols(); ++j)
        if (e(i, j).field()) return e(i, j).field();
  return nullptr;
}

std::vector<Cyclotomic> unit_roots(const MatrixGroup<Cyclotomic>& g, int order) {
  auto f = group_field(g);
  if (!f) {
    if (order % 2 == 0) return {Cyclotomic(1), Cyclotomic(-1)};
    return {Cyclotomic(1)};
  }
  std::vector<Cyclotomic> out;
  const long n = f->order();
  for (long j = 0; j < n; ++j)
    if ((j * order) % n == 0) out.push_back(Cyclotomic::zeta(f, j));
  return out;
}

/// Coefficient rows of sum_j a_j images[j] = 0, keyed by (component, exponent).
template <class S>
void append_rows(RrefBuilder<S>& builder, const std::vector<std::vector<MultiPoly<S>>>& images) {
  std::map<std::pair<int, typename MultiPoly<S>::Exponent>, SparseRow<S>> rows;
  for (std::size_t j = 0; j < images.size(); ++j)
    for (std::size_t c = 0; c < images[j].size(); ++c)
      for (const auto& [e, v] : images[j][c].terms()) rows[{static_cast<int>(c), e}][static_cast<int>(j)] += v;
  for (auto& [key, row] : rows) builder.add_row(std::move(row));
}

template <class S>
MultiPoly<S> combine(const std::vector<S>& coeffs, const std::vector<MultiPoly<S>>& basis, const VarList& vars) {
  MultiPoly<S> acc(vars);
  for (std::size_t j = 0; j < basis.size(); ++j)
    if (!coeffs[j].is_zero()) acc += basis[j] * coeffs[j];
  return acc;
}

template <class S>
std::optional<S> relative_character(const MultiPoly<S>& p, const MultiPoly<S>& moved) {
  if (p.is_zero()) return std::nullopt;
  const auto& [e, c] = *p.terms().begin();
  S chi = moved.coefficient(e) / c;
  if (!(moved == p * chi)) return std::nullopt;
  return chi;
}

}  // namespace

std::string to_string(VerdictReason r) {
  switch (r) {
    case VerdictReason::unique_field: return "unique_field";
    case VerdictReason::contains_minus_I: return "contains_minus_I";
    case VerdictReason::family_dimension_gt_1: return "family_dimension_gt_1";
    case VerdictReason::zero_only: return "zero_only";
    case VerdictReason::symmetry_extends: return "symmetry_extends";
  }
  return "";
}

template <class S>
std::vector<MultiPoly<S>> monomials_of_degree(const VarList& vars, int degree) {
  const int n = static_cast<int>(vars->size());
  std::vector<MultiPoly<S>> out;
  std::vector<int> e(n, 0);
  // Enumerate compositions of degree into n parts.
  auto rec = [&](auto&& self, int pos, int left) -> void {
    if (pos == n - 1) {
      e[pos] = left;
      out.push_back(MultiPoly<S>::monomial(vars, e, S(1)));
      return;
    }
    for (int k = left; k >= 0; --k) {
      e[pos] = k;
      self(self, pos + 1, left - k);
    }
  };
  if (degree >= 0 && n > 0) rec(rec, 0, degree);
  return out;
}

template <class S>
std::vector<RelativeInvariants<S>> relative_invariants(const MatrixGroup<S>& g, int degree) {
  if (g.elements.empty()) throw InvalidArgument("empty group");
  VarList vars = indexed_vars(g.dim());
  if (g.dim() == 3) vars = xyz_vars();
  std::vector<RelativeInvariants<S>> pieces{{{}, monomials_of_degree<S>(vars, degree)}};
  for (const auto& gen : g.generators) {
    const int ord = element_order<S>(gen);
    std::vector<RelativeInvariants<S>> next;
    for (const auto& piece : pieces) {
      std::vector<MultiPoly<S>> moved;
      for (const auto& b : piece.basis) moved.push_back(b.compose_linear(gen));
      for (const S& lambda : unit_roots(g, ord)) {
        std::vector<std::vector<MultiPoly<S>>> images;
        for (std::size_t j = 0; j < moved.size(); ++j) images.push_back({moved[j] - piece.basis[j] * lambda});
        RrefBuilder<S> b(static_cast<int>(moved.size()));
        append_rows(b, images);
        auto ker = b.kernel();
        if (ker.empty()) continue;
        RelativeInvariants<S> out;
        out.character = piece.character;
        out.character.push_back(lambda);
        for (const auto& k : ker) out.basis.push_back(combine(k, piece.basis, vars));
        next.push_back(std::move(out));
      }
    }
    pieces = std::move(next);
  }
  return pieces;
}

template <class S>
std::vector<std::vector<MultiPoly<S>>> numerator_space(const MatrixGroup<S>& g, const std::vector<S>& character,
                                                       int numerator_degree) {
  if (character.size() != g.generators.size()) throw DimensionMismatch("one character value per generator");
  const int n = g.dim();
  VarList vars = n == 3 ? xyz_vars() : indexed_vars(n);
  auto monos = monomials_of_degree<S>(vars, numerator_degree);
  const int m = static_cast<int>(monos.size());
  const int unknowns = n * m;
  RrefBuilder<S> builder(unknowns);
  for (std::size_t gi = 0; gi < g.generators.size(); ++gi) {
    const auto& gen = g.generators[gi];
    ExactMatrix<S> inv = exact_inverse<S>(gen);
    std::vector<MultiPoly<S>> moved;
    for (const auto& mono : monos) moved.push_back(mono.compose_linear(gen));
    std::vector<std::vector<MultiPoly<S>>> images;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < m; ++j) {
        std::vector<MultiPoly<S>> img(n, MultiPoly<S>(vars));
        for (int r = 0; r < n; ++r)
          if (!inv(r, i).is_zero()) img[r] = moved[j] * inv(r, i);
        img[i] -= monos[j] * character[gi];
        images.push_back(std::move(img));
      }
    append_rows(builder, images);
  }
  std::vector<std::vector<MultiPoly<S>>> out;
  for (const auto& k : builder.kernel()) {
    std::vector<MultiPoly<S>> field;
    for (int i = 0; i < n; ++i) {
      std::vector<S> part(k.begin() + i * m, k.begin() + (i + 1) * m);
      field.push_back(combine(part, monos, vars));
    }
    out.push_back(std::move(field));
  }
  return out;
}

template <class S>
bool is_invariant_under_group(const RationalVF<S>& v, const MatrixGroup<S>& g) {
  for (const auto& e : g.elements)
    if (!fields_equal(conjugation_action(v, e), v)) return false;
  return true;
}

template <class S>
InvariantSpace<S> solve_invariant_space(const MatrixGroup<S>& g, const MultiPoly<S>& denominator,
                                        bool check_full_group) {
  if (denominator.is_zero()) throw InvalidArgument("denominator vanishes identically");
  const int k = denominator.homogeneous_degree();
  if (k < 0) throw InvalidArgument("denominator is not homogeneous");
  if (denominator.num_vars() != g.dim()) throw DimensionMismatch("denominator ring does not match group dimension");
  InvariantSpace<S> space;
  space.denominator = denominator;
  space.denominator_degree = k;
  space.group_tag = g.tag;
  for (const auto& gen : g.generators) {
    auto chi = relative_character(denominator, denominator.compose_linear(gen));
    if (!chi) throw InvalidArgument("denominator is not a relative invariant of the group");
    space.character.push_back(*chi);
  }
  for (auto& nums : numerator_space(g, space.character, k + 2)) {
    std::vector<MultiPoly<S>> moved;
    for (auto& p : nums) moved.push_back(p.with_vars(denominator.vars()));
    space.basis.emplace_back(std::move(moved), denominator);
  }
  space.dimension = static_cast<int>(space.basis.size());
  if (check_full_group)
    for (const auto& b : space.basis)
      if (!is_invariant_under_group(b, g))
        throw VerificationFailure("basis field fails invariance under the full group");
  return space;
}

template <class S>
DegreeReport<S> solve_invariant_family(const MatrixGroup<S>& g, int denominator_degree) {
  DegreeReport<S> report;
  report.degree = denominator_degree;
  for (auto& rel : relative_invariants(g, denominator_degree)) {
    CharacterBlock<S> block;
    block.character = rel.character;
    block.denominators = std::move(rel.basis);
    block.numerators = numerator_space(g, block.character, denominator_degree + 2);
    report.blocks.push_back(std::move(block));
  }
  return report;
}

namespace {

template <class S>
std::vector<ExactMatrix<S>> signed_permutations() {
  std::vector<ExactMatrix<S>> out;
  const int perms[6][3] = {{0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
  for (const auto& p : perms)
    for (int signs = 0; signs < 8; ++signs) {
      ExactMatrix<S> m = ExactMatrix<S>::Zero(3, 3);
      for (int r = 0; r < 3; ++r) m(r, p[r]) = S((signs >> r) & 1 ? -1 : 1);
      out.push_back(m);
    }
  return out;
}

}  // namespace

template <class S>
SuperflowVerdict<S> superflow_verdict(const MatrixGroup<S>& g, int max_denominator_degree,
                                       const std::optional<ExactMatrix<S>>& frame) {
  if (max_denominator_degree < 0) throw InvalidArgument("max denominator degree must be non-negative");
  SuperflowVerdict<S> v;
  if (contains_minus_identity(g)) {
    v.reason = VerdictReason::contains_minus_I;
    return v;
  }
  for (int k = 0; k <= max_denominator_degree; ++k) {
    v.sweep.push_back(solve_invariant_family(g, k));
    const auto& rep = v.sweep.back();
    const int fd = rep.family_dimension();
    if (fd == 0) continue;
    v.degree = k;
    v.family_dimension = fd;
    for (const auto& b : rep.blocks)
      if (!b.numerators.empty()) {
        std::vector<MultiPoly<S>> nums;
        for (const auto& p : b.numerators.front()) nums.push_back(p.with_vars(b.denominators.front().vars()));
        v.witness = RationalVF<S>(std::move(nums), b.denominators.front()).normalized();
        break;
      }
    if (fd > 1) {
      v.reason = VerdictReason::family_dimension_gt_1;
      return v;
    }
    if (g.dim() == 3)
      for (ExactMatrix<S> p : signed_permutations<S>()) {
        if (frame) p = ExactMatrix<S>((*frame) * p * exact_inverse(*frame));
        if (g.contains(p)) continue;
        if (fields_equal(conjugation_action(*v.witness, p), *v.witness)) {
          v.reason = VerdictReason::symmetry_extends;
          v.extra_symmetry = p;
          return v;
        }
      }
    v.reason = VerdictReason::unique_field;
    v.exists = true;
    return v;
  }
  v.reason = VerdictReason::zero_only;
  return v;
}

CatalogVerdict catalog_verdict(const GroupSpec& spec, int max_denominator_degree) {
  CatalogGroup group = build_catalog_group(spec);
  if (auto* g = std::get_if<MatrixGroup<Golden>>(&group)) return superflow_verdict(*g, max_denominator_degree);
  std::optional<ExactMatrix<Cyclotomic>> frame;
  if (spec.diagonal) frame = tau_matrix(make_cyclotomic_field(cyclotomic_order(spec)));
  return superflow_verdict(std::get<MatrixGroup<Cyclotomic>>(group), max_denominator_degree, frame);
}

RationalVF<Golden> symmetric_q_field(int n) {
  if (n < 2) throw InvalidArgument("Q field needs n >= 2");
  VarList vars = indexed_vars(n);
  auto x = MultiPoly<Golden>::generators(vars);
  const Golden c(Rational(-2, n - 1));
  std::vector<MultiPoly<Golden>> comps;
  for (int i = 0; i < n; ++i) {
    MultiPoly<Golden> rest(vars);
    for (int j = 0; j < n; ++j)
      if (j != i) rest += x[j];
    comps.push_back(x[i] * x[i] + x[i] * rest * c);
  }
  return RationalVF<Golden>::polynomial(std::move(comps));
}

PropExtReport verify_prop_ext(int n) {
  using G = Golden;
  using P = MultiPoly<G>;
  if (n < 3) throw InvalidArgument("verify_prop_ext needs n >= 3");
  PropExtReport rep;
  rep.n = n;
  rep.ambient_dimension = n + 1;
  GroupSpec spec{GroupFamily::symmetric_rep_z2, n, false};
  auto group = std::get<MatrixGroup<G>>(build_catalog_group(spec));
  rep.group_order = group.order();

  VarList vars = indexed_vars(n + 1);
  auto x = P::generators(vars);
  auto q = symmetric_q_field(n);
  std::vector<int> slots(n);
  for (int i = 0; i < n; ++i) slots[i] = i;
  std::vector<P> q_hat;
  for (const auto& c : q.numerators()) q_hat.push_back(c.embed(vars, slots));
  q_hat.push_back(P(vars));
  std::vector<P> extra_a(n, x[n] * x[n]);
  extra_a.push_back(P(vars));
  std::vector<P> extra_b(n, P(vars));
  P sum(vars);
  for (int j = 0; j < n; ++j) sum += x[j];
  extra_b.push_back(x[n] * sum);
  std::vector<RationalVF<G>> ansatz = {RationalVF<G>::polynomial(q_hat), RationalVF<G>::polynomial(extra_a),
                                       RationalVF<G>::polynomial(extra_b)};

  RrefBuilder<G> builder(3);
  for (const auto& gen : group.generators) {
    std::vector<std::vector<P>> images;
    for (const auto& f : ansatz) {
      auto moved = conjugation_action(f, gen);
      std::vector<P> img;
      for (int i = 0; i <= n; ++i) img.push_back(moved.numerator(i) - f.numerator(i));
      images.push_back(std::move(img));
    }
    append_rows(builder, images);
  }
  auto ker = builder.kernel();
  rep.constrained_dimension = static_cast<int>(ker.size());
  rep.a_b_eliminated = ker.size() == 1 && !ker[0][0].is_zero() && ker[0][1].is_zero() && ker[0][2].is_zero();

  auto space = solve_invariant_space(group, P::constant(indexed_vars(n + 1), G(1)));
  rep.unconstrained_dimension = space.dimension;
  if (space.dimension == 1) {
    auto target = RationalVF<G>::polynomial(q_hat);
    rep.matches_q_hat = proportionality_factor(space.basis.front().normalized(), target).has_value();
  }
  auto base = std::get<MatrixGroup<G>>(build_catalog_group(GroupSpec{GroupFamily::symmetric_rep, n, false}));
  rep.q_invariant_under_base = is_invariant_under_group(q, base);
  return rep;
}

#define SUPERFLOW_SOLVER_INSTANTIATE(S)                                                             \
  template std::vector<MultiPoly<S>> monomials_of_degree(const VarList&, int);                      \
  template std::vector<RelativeInvariants<S>> relative_invariants(const MatrixGroup<S>&, int);      \
  template std::vector<std::vector<MultiPoly<S>>> numerator_space(const MatrixGroup<S>&,           \
                                                                   const std::vector<S>&, int);     \
  template InvariantSpace<S> solve_invariant_space(const MatrixGroup<S>&, const MultiPoly<S>&, bool); \
  template bool is_invariant_under_group(const RationalVF<S>&, const MatrixGroup<S>&);             \
  template DegreeReport<S> solve_invariant_family(const MatrixGroup<S>&, int);                       \
  template SuperflowVerdict<S> superflow_verdict(const MatrixGroup<S>&, int, const std::optional<ExactMatrix<S>>&);
SUPERFLOW_SOLVER_INSTANTIATE(Golden)
SUPERFLOW_SOLVER_INSTANTIATE(Cyclotomic)
#undef SUPERFLOW_SOLVER_INSTANTIATE

}  // namespace superflow
