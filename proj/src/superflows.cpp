#include "superflow/superflows.hpp"

#include "superflow/errors.hpp"
#include "superflow/invariant_solver.hpp"

namespace superflow {
namespace {

using G = Golden;
using P = MultiPoly<G>;

struct Xyz {
  P x, y, z;
};

Xyz xyz() {
  auto v = P::generators(xyz_vars());
  return {v[0], v[1], v[2]};
}

P zero() { return P(xyz_vars()); }

}  // namespace

SuperflowName parse_superflow_name(const std::string& text) {
  if (text == "T_hat" || text == "T") return SuperflowName::T_hat;
  if (text == "O") return SuperflowName::O;
  if (text == "I") return SuperflowName::I;
  if (text == "P3") return SuperflowName::P3;
  if (text == "A4") return SuperflowName::A4;
  throw InvalidArgument("unknown superflow '" + text + "' (expected T_hat, O, I, P3, A4)");
}

std::string to_string(SuperflowName name) {
  switch (name) {
    case SuperflowName::T_hat: return "T_hat";
    case SuperflowName::O: return "O";
    case SuperflowName::I: return "I";
    case SuperflowName::P3: return "P3";
    case SuperflowName::A4: return "A4";
  }
  return "";
}

std::vector<SuperflowName> all_superflows() {
  return {SuperflowName::T_hat, SuperflowName::O, SuperflowName::I, SuperflowName::P3, SuperflowName::A4};
}

MultiPoly<Golden> sphere_integral() {
  auto [x, y, z] = xyz();
  return x * x + y * y + z * z;
}

MultiPoly<Golden> icosahedral_integral() {
  auto [x, y, z] = xyz();
  G p2 = G::phi() * G::phi();
  return (x * x * p2 - y * y) * (y * y * p2 - z * z) * (z * z * p2 - x * x);
}

RationalVF<Golden> icosahedral_field() {
  auto [x, y, z] = xyz();
  auto comp = [](const P& a, const P& b, const P& c) {
    return b * c.pow(5) * G(5, -1) + b.pow(5) * c * G(5, 1) - b.pow(3) * c.pow(3) * G(20) +
           a * a * b * c.pow(3) * G(10, 10) + a * a * b.pow(3) * c * G(10, -10) - a.pow(4) * b * c * G(10);
  };
  P w = sphere_integral();
  return RationalVF<G>({comp(x, y, z), comp(y, z, x), comp(z, x, y)}, w * w);
}

RationalVF<Golden> tetrahedral_field() {
  auto [x, y, z] = xyz();
  return RationalVF<G>::polynomial({y * z, x * z, x * y});
}

RationalVF<Golden> octahedral_field() {
  auto [x, y, z] = xyz();
  return RationalVF<G>({y.pow(3) * z - y * z.pow(3), z.pow(3) * x - z * x.pow(3), x.pow(3) * y - x * y.pow(3)},
                       sphere_integral());
}

RationalVF<Golden> prism_field() {
  auto [x, y, z] = xyz();
  return RationalVF<G>::polynomial({-(x * x) + x * y * G(2) + y * y, x * x + x * y * G(2) - y * y, zero()});
}

RationalVF<Golden> antiprism_field() {
  auto [x, y, z] = xyz();
  return RationalVF<G>({x.pow(3) - x * y * y * G(3), y.pow(3) - y * x * x * G(3), zero()}, z);
}

ExactMatrix<Cyclotomic> prism_delta_matrix() {
  auto f = make_cyclotomic_field(24);
  const Cyclotomic sqrt3 = Cyclotomic::cos_pi(f, 1, 6) * Cyclotomic(2);
  ExactMatrix<Cyclotomic> d(3, 3);
  d << Cyclotomic(1) - sqrt3, Cyclotomic(1) + sqrt3, Cyclotomic(0), Cyclotomic(1) + sqrt3, Cyclotomic(1) - sqrt3,
      Cyclotomic(0), Cyclotomic(0), Cyclotomic(0), Cyclotomic(1);
  return d;
}

RationalVF<Cyclotomic> prism_delta_conjugate() {
  return conjugation_action(to_cyclotomic(prism_field(), make_cyclotomic_field(24)), prism_delta_matrix());
}

RationalVF<Cyclotomic> prism_delta_target() {
  auto f = make_cyclotomic_field(24);
  auto g = MultiPoly<Cyclotomic>::generators(xyz_vars());
  const auto &x = g[0], &y = g[1];
  const Cyclotomic m4(-4), two(2);
  return RationalVF<Cyclotomic>::polynomial(
      {(x * x - x * y * two) * m4, (y * y - x * y * two) * m4, MultiPoly<Cyclotomic>(xyz_vars())});
}

bool field_invariant_under(const RationalVF<Golden>& v, const CatalogGroup& group) {
  if (const auto* g = std::get_if<MatrixGroup<Golden>>(&group)) return is_invariant_under_group(v, *g);
  const auto& cg = std::get<MatrixGroup<Cyclotomic>>(group);
  CyclotomicFieldPtr f;
  for (const auto& e : cg.elements)
    for (Eigen::Index i = 0; i < e.size(); ++i)
      if (!f && e(i).field()) f = e(i).field();
  if (!f) f = make_cyclotomic_field(8);
  return is_invariant_under_group(to_cyclotomic(v, f), cg);
}

Superflow build_superflow(SuperflowName name) {
  auto [x, y, z] = xyz();
  Superflow s{name, tetrahedral_field(), {}, {}, {}, {}, 0, false};
  switch (name) {
    case SuperflowName::T_hat:
      s.field = tetrahedral_field();
      s.group_spec = parse_group_spec("T_hat");
      s.first_integrals = {x * x - y * y, x * x - z * z};
      s.integral_labels = {"x^2-y^2", "x^2-z^2"};
      s.genus_metadata = 1;
      break;
    case SuperflowName::O:
      s.field = octahedral_field();
      s.group_spec = parse_group_spec("O");
      s.first_integrals = {sphere_integral(), x.pow(4) + y.pow(4) + z.pow(4)};
      s.integral_labels = {"W", "x^4+y^4+z^4"};
      s.genus_metadata = 9;
      s.spherical = true;
      break;
    case SuperflowName::I:
      s.field = icosahedral_field();
      s.group_spec = parse_group_spec("I");
      s.first_integrals = {sphere_integral(), icosahedral_integral()};
      s.integral_labels = {"W", "V"};
      s.genus_metadata = 25;
      s.spherical = true;
      break;
    case SuperflowName::P3:
      s.field = prism_field();
      s.group_spec = parse_group_spec("prism:3");
      s.first_integrals = {(x - y) * (x * x + x * y * G(4) + y * y), z};
      s.integral_labels = {"(x-y)(x^2+4xy+y^2)", "z"};
      s.genus_metadata = 1;
      break;
    case SuperflowName::A4:
      s.field = antiprism_field();
      s.group_spec = parse_group_spec("antiprism:4");
      s.first_integrals = {x.pow(3) * y - x * y.pow(3), z};
      s.integral_labels = {"x^3y-xy^3", "z"};
      s.genus_metadata = 3;
      break;
  }
  s.group = build_catalog_group(s.group_spec);
  if (!field_invariant_under(s.field, s.group))
    throw VerificationFailure(to_string(name) + ": field is not invariant under its group");
  for (std::size_t k = 0; k < s.first_integrals.size(); ++k)
    if (!lie_derivative_numerator(s.first_integrals[k], s.field).is_zero())
      throw VerificationFailure(to_string(name) + ": " + s.integral_labels[k] + " is not a first integral");
  return s;
}

}  // namespace superflow
