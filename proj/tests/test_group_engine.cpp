#include <doctest.h>

#include <algorithm>
#include <random>

#include "superflow/catalog_groups.hpp"
#include "superflow/errors.hpp"

using namespace superflow;

namespace {

template <class S>
int order_of(const CatalogGroup& g) {
  return std::get<MatrixGroup<S>>(g).order();
}

int catalog_order(const std::string& spec) {
  auto g = build_catalog_group(parse_group_spec(spec));
  return std::visit([](const auto& grp) { return grp.order(); }, g);
}

}  // namespace

TEST_CASE("icosahedral generators close to order 60") {
  auto g = generate_group(icosahedral_generators());
  CHECK(g.order() == 60);
  CHECK(!contains_minus_identity(g));
  for (const auto& e : g.elements) CHECK(is_orthogonal<Golden>(e));
  CHECK(rotation_subgroup_order(g) == 60);
}

TEST_CASE("trivial group") {
  auto g = generate_group<Golden>({ExactMatrix<Golden>::Identity(3, 3)});
  CHECK(g.order() == 1);
  CHECK(!contains_minus_identity(g));
}

TEST_CASE("generate_group errors") {
  ExactMatrix<Golden> two = ExactMatrix<Golden>::Identity(3, 3) * Golden(2);
  CHECK_THROWS_AS(generate_group<Golden>({two}), GroupNotFinite);
  ExactMatrix<Golden> sing = ExactMatrix<Golden>::Zero(3, 3);
  CHECK_THROWS_AS(generate_group<Golden>({sing}), SingularMatrix);
  CHECK_THROWS_AS(generate_group<Golden>({}), InvalidArgument);
}

TEST_CASE("prism group of the reducible superflow") {
  auto f = make_cyclotomic_field(24);
  // -1/2, -sqrt3/2 / sqrt3/2, -1/2 / -1 and the swap.
  auto r = planar_rotation(f, 2, 3, -1);
  CHECK(r(0, 0) == Cyclotomic(Rational(-1, 2)));
  CHECK(r(1, 0) * r(1, 0) == Cyclotomic(Rational(3, 4)));
  auto g = generate_group<Cyclotomic>({r, swap_xy<Cyclotomic>()});
  CHECK(g.order() == 12);
}

TEST_CASE("Table 1 orders") {
  CHECK(catalog_order("I") == 60);
  CHECK(catalog_order("I_pm") == 120);
  CHECK(catalog_order("T") == 12);
  CHECK(catalog_order("T_pm") == 24);
  CHECK(catalog_order("T_hat") == 24);
  CHECK(catalog_order("O") == 24);
  CHECK(catalog_order("O_pm") == 48);
  CHECK(catalog_order("prism:3") == 12);
  CHECK(catalog_order("prism:5") == 20);
  CHECK(catalog_order("antiprism:4") == 16);
  CHECK(catalog_order("antiprism:2") == 8);
  CHECK(catalog_order("S:3") == 24);
  CHECK(catalog_order("S_Z2:3") == 48);
  for (int d = 1; d <= 6; ++d) {
    CHECK(catalog_order("C:" + std::to_string(d)) == d);
    CHECK(catalog_order("C_pm:" + std::to_string(d)) == 2 * d);
    CHECK(catalog_order("C2dCd:" + std::to_string(d)) == 2 * d);
    CHECK(catalog_order("D:" + std::to_string(d)) == 2 * d);
    CHECK(catalog_order("D_pm:" + std::to_string(d)) == 4 * d);
    CHECK(catalog_order("DdCd:" + std::to_string(d)) == 2 * d);
  }
}

TEST_CASE("symmetric representation n = 4 with Z2") {
  CHECK(catalog_order("S:4") == 120);
  CHECK(catalog_order("S_Z2:4") == 240);
}

TEST_CASE("contains_minus_identity") {
  CHECK(std::get<MatrixGroup<Golden>>(build_catalog_group(parse_group_spec("I_pm"))).order() == 120);
  CHECK(contains_minus_identity(std::get<MatrixGroup<Golden>>(build_catalog_group(parse_group_spec("I_pm")))));
  CHECK(!contains_minus_identity(std::get<MatrixGroup<Golden>>(build_catalog_group(parse_group_spec("I")))));
  CHECK(!contains_minus_identity(std::get<MatrixGroup<Golden>>(build_catalog_group(parse_group_spec("T_hat")))));
  CHECK(contains_minus_identity(std::get<MatrixGroup<Cyclotomic>>(build_catalog_group(parse_group_spec("D_pm:3")))));
  CHECK(!contains_minus_identity(std::get<MatrixGroup<Cyclotomic>>(build_catalog_group(parse_group_spec("antiprism:4")))));
  // An odd antiprism would contain -I, so the prism is used instead.
  auto f = make_cyclotomic_field(24);
  auto g = generate_group<Cyclotomic>({planar_rotation(f, 1, 3, -1), swap_xy<Cyclotomic>()});
  CHECK(contains_minus_identity(g));
}

TEST_CASE("every O(3) catalog element is orthogonal") {
  for (const auto& spec : default_catalog_specs()) {
    auto g = build_catalog_group(spec);
    const bool in_o3 = family_kind(spec.family) != "symmetric-rep";
    CAPTURE(to_string(spec));
    std::visit(
        [&](const auto& grp) {
          using S = typename std::decay_t<decltype(grp.elements)>::value_type::Scalar;
          int orthogonal = 0;
          for (const auto& e : grp.elements) orthogonal += is_orthogonal<S>(e) ? 1 : 0;
          // The S_{n+1} representation lives in GL(n, Q), not O(n).
          if (in_o3) CHECK(orthogonal == grp.order());
          else CHECK(orthogonal < grp.order());
          CHECK(grp.order() == expected_order(spec));
          CHECK(grp.dim() == expected_dimension(spec));
        },
        g);
  }
}

TEST_CASE("mixed groups have a rotation subgroup of index 2") {
  for (std::string s : {"C2dCd:3", "C2dCd:4", "DdCd:3", "DdCd:4", "T_hat", "prism:3", "antiprism:4", "antiprism:6"}) {
    auto g = build_catalog_group(parse_group_spec(s));
    std::visit([&](const auto& grp) { CHECK(2 * rotation_subgroup_order(grp) == grp.order()); }, g);
  }
}

TEST_CASE("generator order independence") {
  auto gens = icosahedral_generators();
  auto a = generate_group(gens).element_set();
  std::mt19937 rng(4);
  for (int k = 0; k < 4; ++k) {
    std::shuffle(gens.begin(), gens.end(), rng);
    auto b = generate_group(gens).element_set();
    CHECK(a.size() == b.size());
    CHECK(std::equal(a.begin(), a.end(), b.begin(), [](const auto& x, const auto& y) { return matrices_equal<Golden>(x, y); }));
  }
}

TEST_CASE("tau diagonalizes the planar rotations") {
  for (int d : {3, 4, 5}) {
    auto f = make_cyclotomic_field(std::lcm(2 * d, 8));
    auto tau = tau_matrix(f);
    CHECK(is_unitary<Cyclotomic>(tau));
    // Case (6): alpha = R(2 pi / d) + 1.
    ExactMatrix<Cyclotomic> a = planar_rotation(f, 2, d, 1);
    ExactMatrix<Cyclotomic> ah = tau * a * exact_inverse<Cyclotomic>(tau);
    Cyclotomic zeta = Cyclotomic::zeta(f, f->order() / d);
    CHECK(ah(0, 0) == zeta);
    CHECK(ah(1, 1) == zeta.inverse());
    CHECK(ah(2, 2) == Cyclotomic(1));
    CHECK(ah(0, 1).is_zero());
    CHECK(ah(1, 0).is_zero());
    // beta and epsilon are fixed.
    ExactMatrix<Cyclotomic> beta = swap_xy<Cyclotomic>();
    beta(2, 2) = Cyclotomic(-1);
    CHECK(matrices_equal<Cyclotomic>(tau * beta * exact_inverse<Cyclotomic>(tau), beta));
  }
  // gamma of the antiprism goes to diag(xi, 1/xi, -1), xi = e^{pi i / l}.
  auto f = make_cyclotomic_field(16);
  auto tau = tau_matrix(f);
  ExactMatrix<Cyclotomic> gamma = planar_rotation(f, 1, 4, -1);
  ExactMatrix<Cyclotomic> gh = tau * gamma * exact_inverse<Cyclotomic>(tau);
  Cyclotomic xi = Cyclotomic::zeta(f, 2);
  CHECK(gh(0, 0) == xi);
  CHECK(gh(1, 1) == xi.inverse());
  CHECK(gh(2, 2) == Cyclotomic(-1));
  CHECK(xi.pow(4) == Cyclotomic(-1));
}

TEST_CASE("conjugate_group preserves order") {
  auto g = std::get<MatrixGroup<Cyclotomic>>(build_catalog_group(parse_group_spec("antiprism:4")));
  auto f = g.elements[1](0, 0).field();
  REQUIRE(f);
  auto h = conjugate_group(g, tau_matrix(f));
  CHECK(h.order() == g.order());
  CHECK(h.element_set().size() == g.element_set().size());
  auto same = conjugate_group<Cyclotomic>(g, ExactMatrix<Cyclotomic>::Identity(3, 3));
  CHECK(same.element_set().size() == g.order());
  for (const auto& e : g.elements) CHECK(same.contains(e));
  CHECK_THROWS_AS(conjugate_group<Cyclotomic>(g, ExactMatrix<Cyclotomic>::Zero(3, 3)), SingularMatrix);
}

TEST_CASE("spec parsing") {
  CHECK(to_string(parse_group_spec("antiprism:4/diag")) == "antiprism:4/diag");
  CHECK(parse_group_spec("C2dCd:5").parameter == 5);
  CHECK_THROWS_AS(parse_group_spec("Q"), InvalidArgument);
  CHECK_THROWS_AS(parse_group_spec("C"), InvalidArgument);
  CHECK_THROWS_AS(parse_group_spec("C:0"), InvalidArgument);
  CHECK_THROWS_AS(parse_group_spec("I:3"), InvalidArgument);
  CHECK_THROWS_AS(parse_group_spec("prism:4"), InvalidArgument);
  CHECK_THROWS_AS(parse_group_spec("I/diag"), InvalidArgument);
}
