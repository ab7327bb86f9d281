#include "superflow/catalog_groups.hpp"

#include <numeric>

#include "superflow/errors.hpp"

namespace superflow {
namespace {

struct FamilyName {
  GroupFamily family;
  const char* name;
};

constexpr FamilyName kNames[] = {
    {GroupFamily::cyclic, "C"},
    {GroupFamily::cyclic_pm, "C_pm"},
    {GroupFamily::mixed_cyclic, "C2dCd"},
    {GroupFamily::dihedral, "D"},
    {GroupFamily::dihedral_pm, "D_pm"},
    {GroupFamily::dihedral_split, "DdCd"},
    {GroupFamily::tetrahedral, "T"},
    {GroupFamily::tetrahedral_pm, "T_pm"},
    {GroupFamily::tetrahedral_full, "T_hat"},
    {GroupFamily::octahedral, "O"},
    {GroupFamily::octahedral_pm, "O_pm"},
    {GroupFamily::icosahedral, "I"},
    {GroupFamily::icosahedral_pm, "I_pm"},
    {GroupFamily::prism, "prism"},
    {GroupFamily::antiprism, "antiprism"},
    {GroupFamily::symmetric_rep, "S"},
    {GroupFamily::symmetric_rep_z2, "S_Z2"},
};

long factorial(int n) {
  long f = 1;
  for (int k = 2; k <= n; ++k) f *= k;
  return f;
}

template <class S>
ExactMatrix<S> diag3(int a, int b, int c) {
  ExactMatrix<S> m = ExactMatrix<S>::Zero(3, 3);
  m(0, 0) = S(a);
  m(1, 1) = S(b);
  m(2, 2) = S(c);
  return m;
}

template <class S>
ExactMatrix<S> minus_identity(int n) {
  ExactMatrix<S> m = ExactMatrix<S>::Identity(n, n);
  return -m;
}

ExactMatrix<Golden> cyclic_perm() {
  ExactMatrix<Golden> b(3, 3);
  b << 0, 0, 1, 1, 0, 0, 0, 1, 0;
  return b;
}

std::vector<ExactMatrix<Golden>> golden_generators(const GroupSpec& spec) {
  using G = Golden;
  switch (spec.family) {
    case GroupFamily::tetrahedral:
      return {cyclic_perm(), diag3<G>(-1, -1, 1)};
    case GroupFamily::tetrahedral_pm:
      return {cyclic_perm(), diag3<G>(-1, -1, 1), minus_identity<G>(3)};
    case GroupFamily::tetrahedral_full:
      return {cyclic_perm(), diag3<G>(-1, -1, 1), swap_xy<G>()};
    case GroupFamily::octahedral: {
      ExactMatrix<G> r(3, 3);
      r << 0, -1, 0, 1, 0, 0, 0, 0, 1;
      return {cyclic_perm(), r};
    }
    case GroupFamily::octahedral_pm: {
      ExactMatrix<G> r(3, 3);
      r << 0, -1, 0, 1, 0, 0, 0, 0, 1;
      return {cyclic_perm(), r, minus_identity<G>(3)};
    }
    case GroupFamily::icosahedral:
      return icosahedral_generators();
    case GroupFamily::icosahedral_pm: {
      auto g = icosahedral_generators();
      g.push_back(minus_identity<G>(3));
      return g;
    }
    case GroupFamily::symmetric_rep:
      return symmetric_rep_generators(spec.parameter);
    case GroupFamily::symmetric_rep_z2: {
      const int n = spec.parameter;
      std::vector<ExactMatrix<G>> out;
      for (const auto& g : symmetric_rep_generators(n)) {
        ExactMatrix<G> m = ExactMatrix<G>::Identity(n + 1, n + 1);
        m.topLeftCorner(n, n) = g;
        out.push_back(m);
      }
      ExactMatrix<G> chi = ExactMatrix<G>::Identity(n + 1, n + 1);
      chi(n, n) = G(-1);
      out.push_back(chi);
      return out;
    }
    default:
      throw InvalidArgument("not a golden family");
  }
}

std::vector<ExactMatrix<Cyclotomic>> cyclotomic_generators(const GroupSpec& spec, const CyclotomicFieldPtr& f) {
  using C = Cyclotomic;
  const long d = spec.parameter;
  switch (spec.family) {
    case GroupFamily::cyclic:
      return {planar_rotation(f, 2, d, 1)};
    case GroupFamily::cyclic_pm:
      return {planar_rotation(f, 2, d, 1), minus_identity<C>(3)};
    case GroupFamily::mixed_cyclic: {
      // -cos, sin / -sin, -cos / -1: minus a rotation by pi/d.
      ExactMatrix<C> r = planar_rotation(f, 1, d, 1);
      return {ExactMatrix<C>(-r)};
    }
    case GroupFamily::dihedral: {
      ExactMatrix<C> beta = swap_xy<C>();
      beta(2, 2) = C(-1);
      return {planar_rotation(f, 2, d, 1), beta};
    }
    case GroupFamily::dihedral_pm: {
      ExactMatrix<C> beta = swap_xy<C>();
      beta(2, 2) = C(-1);
      return {planar_rotation(f, 2, d, 1), beta, minus_identity<C>(3)};
    }
    case GroupFamily::dihedral_split:
      return {planar_rotation(f, 2, d, 1), swap_xy<C>()};
    case GroupFamily::prism:
      return {planar_rotation(f, 2, d, -1), swap_xy<C>()};
    case GroupFamily::antiprism:
      return {planar_rotation(f, 1, d, -1), swap_xy<C>()};
    default:
      throw InvalidArgument("not a cyclotomic family");
  }
}

}  // namespace

GroupSpec parse_group_spec(const std::string& text) {
  GroupSpec spec;
  std::string body = text;
  const std::string suffix = "/diag";
  if (body.size() > suffix.size() && body.compare(body.size() - suffix.size(), suffix.size(), suffix) == 0) {
    spec.diagonal = true;
    body.resize(body.size() - suffix.size());
  }
  std::string name = body;
  std::string param;
  if (auto colon = body.find(':'); colon != std::string::npos) {
    name = body.substr(0, colon);
    param = body.substr(colon + 1);
  }
  bool found = false;
  for (const auto& fn : kNames)
    if (name == fn.name) {
      spec.family = fn.family;
      found = true;
    }
  if (!found) throw InvalidArgument("unknown group family '" + name + "'");
  if (is_parametric(spec.family)) {
    if (param.empty()) throw InvalidArgument("group family '" + name + "' needs a parameter");
    std::size_t used = 0;
    try {
      spec.parameter = std::stoi(param, &used);
    } catch (const std::exception&) {
      throw InvalidArgument("bad group parameter '" + param + "'");
    }
    if (used != param.size() || spec.parameter < 1) throw InvalidArgument("bad group parameter '" + param + "'");
  } else if (!param.empty()) {
    throw InvalidArgument("group family '" + name + "' takes no parameter");
  }
  if (spec.family == GroupFamily::prism && spec.parameter % 2 == 0)
    throw InvalidArgument("prism parameter must be odd");
  if (spec.family == GroupFamily::antiprism && spec.parameter % 2 == 1)
    throw InvalidArgument("antiprism parameter must be even");
  if ((spec.family == GroupFamily::symmetric_rep || spec.family == GroupFamily::symmetric_rep_z2) &&
      spec.parameter < 2)
    throw InvalidArgument("symmetric representation needs n >= 2");
  if (spec.diagonal && uses_golden_scalars(spec))
    throw InvalidArgument("diagonal form exists only for the planar-rotation families");
  return spec;
}

std::string to_string(const GroupSpec& spec) {
  std::string out;
  for (const auto& fn : kNames)
    if (fn.family == spec.family) out = fn.name;
  if (is_parametric(spec.family)) out += ":" + std::to_string(spec.parameter);
  if (spec.diagonal) out += "/diag";
  return out;
}

bool is_parametric(GroupFamily f) {
  switch (f) {
    case GroupFamily::cyclic:
    case GroupFamily::cyclic_pm:
    case GroupFamily::mixed_cyclic:
    case GroupFamily::dihedral:
    case GroupFamily::dihedral_pm:
    case GroupFamily::dihedral_split:
    case GroupFamily::prism:
    case GroupFamily::antiprism:
    case GroupFamily::symmetric_rep:
    case GroupFamily::symmetric_rep_z2:
      return true;
    default:
      return false;
  }
}

bool uses_golden_scalars(const GroupSpec& spec) {
  switch (spec.family) {
    case GroupFamily::tetrahedral:
    case GroupFamily::tetrahedral_pm:
    case GroupFamily::tetrahedral_full:
    case GroupFamily::octahedral:
    case GroupFamily::octahedral_pm:
    case GroupFamily::icosahedral:
    case GroupFamily::icosahedral_pm:
    case GroupFamily::symmetric_rep:
    case GroupFamily::symmetric_rep_z2:
      return true;
    default:
      return false;
  }
}

int cyclotomic_order(const GroupSpec& spec) {
  if (uses_golden_scalars(spec)) return 0;
  const int d = spec.parameter;
  switch (spec.family) {
    case GroupFamily::mixed_cyclic:
    case GroupFamily::antiprism:
      return std::lcm(2 * d, 8);
    default:
      return std::lcm(d, 8);
  }
}

int expected_order(const GroupSpec& spec) {
  const int d = spec.parameter;
  switch (spec.family) {
    case GroupFamily::cyclic: return d;
    case GroupFamily::cyclic_pm: return 2 * d;
    case GroupFamily::mixed_cyclic: return 2 * d;
    case GroupFamily::dihedral: return 2 * d;
    case GroupFamily::dihedral_pm: return 4 * d;
    case GroupFamily::dihedral_split: return 2 * d;
    case GroupFamily::tetrahedral: return 12;
    case GroupFamily::tetrahedral_pm: return 24;
    case GroupFamily::tetrahedral_full: return 24;
    case GroupFamily::octahedral: return 24;
    case GroupFamily::octahedral_pm: return 48;
    case GroupFamily::icosahedral: return 60;
    case GroupFamily::icosahedral_pm: return 120;
    case GroupFamily::prism: return 4 * d;
    case GroupFamily::antiprism: return 4 * d;
    case GroupFamily::symmetric_rep: return static_cast<int>(factorial(d + 1));
    case GroupFamily::symmetric_rep_z2: return static_cast<int>(2 * factorial(d + 1));
  }
  return 0;
}

int expected_dimension(const GroupSpec& spec) {
  if (spec.family == GroupFamily::symmetric_rep) return spec.parameter;
  if (spec.family == GroupFamily::symmetric_rep_z2) return spec.parameter + 1;
  return 3;
}

std::string family_kind(GroupFamily f) {
  switch (f) {
    case GroupFamily::cyclic:
    case GroupFamily::dihedral:
    case GroupFamily::tetrahedral:
    case GroupFamily::octahedral:
    case GroupFamily::icosahedral:
      return "rotation";
    case GroupFamily::cyclic_pm:
    case GroupFamily::dihedral_pm:
    case GroupFamily::tetrahedral_pm:
    case GroupFamily::octahedral_pm:
    case GroupFamily::icosahedral_pm:
      return "product-with-minus-I";
    case GroupFamily::mixed_cyclic:
    case GroupFamily::dihedral_split:
    case GroupFamily::tetrahedral_full:
    case GroupFamily::prism:
    case GroupFamily::antiprism:
      return "mixed";
    case GroupFamily::symmetric_rep:
    case GroupFamily::symmetric_rep_z2:
      return "symmetric-rep";
  }
  return "";
}

CatalogGroup build_catalog_group(const GroupSpec& spec) {
  const int want = expected_order(spec);
  auto check = [&](int got) {
    if (got != want)
      throw VerificationFailure("group " + to_string(spec) + " has order " + std::to_string(got) + ", expected " +
                                std::to_string(want));
  };
  if (uses_golden_scalars(spec)) {
    auto g = generate_group(golden_generators(spec), std::max(kDefaultGroupCap, want), to_string(spec));
    check(g.order());
    return g;
  }
  auto field = make_cyclotomic_field(cyclotomic_order(spec));
  auto g = generate_group(cyclotomic_generators(spec, field), kDefaultGroupCap, to_string(spec));
  check(g.order());
  if (spec.diagonal) g = conjugate_group(g, tau_matrix(field));
  return g;
}

std::vector<GroupSpec> default_catalog_specs() {
  std::vector<std::string> names = {"C:3",  "C_pm:3", "C2dCd:3",     "D:3",     "D_pm:3", "DdCd:3",
                                    "T",    "T_pm",   "T_hat",       "O",       "O_pm",   "I",
                                    "I_pm", "prism:3", "antiprism:4", "S:3",     "S_Z2:3"};
  std::vector<GroupSpec> out;
  for (const auto& n : names) out.push_back(parse_group_spec(n));
  return out;
}

std::vector<ExactMatrix<Golden>> icosahedral_generators() {
  using G = Golden;
  const G phi = G::phi();
  const G h(Rational(1, 2));
  const G inv2phi = (phi * 2).inverse();
  ExactMatrix<G> a = diag3<G>(-1, -1, 1);
  ExactMatrix<G> c(3, 3);
  c << h, -phi * h, inv2phi, phi * h, inv2phi, -h, inv2phi, h, phi * h;
  return {a, cyclic_perm(), c};
}

template <class S>
ExactMatrix<S> swap_xy() {
  ExactMatrix<S> m = ExactMatrix<S>::Zero(3, 3);
  m(0, 1) = S(1);
  m(1, 0) = S(1);
  m(2, 2) = S(1);
  return m;
}

template ExactMatrix<Golden> swap_xy<Golden>();
template ExactMatrix<Cyclotomic> swap_xy<Cyclotomic>();

ExactMatrix<Cyclotomic> tau_matrix(const CyclotomicFieldPtr& field) {
  using C = Cyclotomic;
  C s = C::sqrt2(field).inverse();
  C i = C::imaginary_unit(field);
  ExactMatrix<C> t = ExactMatrix<C>::Zero(3, 3);
  t(0, 0) = s;
  t(0, 1) = i * s;
  t(1, 0) = i * s;
  t(1, 1) = s;
  t(2, 2) = C(1);
  return t;
}

ExactMatrix<Cyclotomic> planar_rotation(const CyclotomicFieldPtr& field, long p, long q, int z_entry) {
  using C = Cyclotomic;
  C c = C::cos_pi(field, p, q);
  C s = C::sin_pi(field, p, q);
  ExactMatrix<C> m = ExactMatrix<C>::Zero(3, 3);
  m(0, 0) = c;
  m(0, 1) = -s;
  m(1, 0) = s;
  m(1, 1) = c;
  m(2, 2) = C(z_entry);
  return m;
}

std::vector<ExactMatrix<Golden>> symmetric_rep_generators(int n) {
  using G = Golden;
  if (n < 2) throw InvalidArgument("symmetric representation needs n >= 2");
  ExactMatrix<G> transposition = ExactMatrix<G>::Identity(n, n);
  transposition(0, 0) = G(0);
  transposition(1, 1) = G(0);
  transposition(0, 1) = G(1);
  transposition(1, 0) = G(1);
  ExactMatrix<G> cycle = ExactMatrix<G>::Zero(n, n);
  for (int i = 0; i < n; ++i) cycle((i + 1) % n, i) = G(1);
  ExactMatrix<G> kappa = ExactMatrix<G>::Identity(n, n);
  for (int i = 0; i < n; ++i) kappa(i, 0) = G(-1);
  return {transposition, cycle, kappa};
}

}  // namespace superflow
