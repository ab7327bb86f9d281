#include <doctest.h>

#include <random>

#include "superflow/catalog_groups.hpp"
#include "superflow/errors.hpp"
#include "superflow/serialize.hpp"
#include "superflow/superflows.hpp"

using namespace superflow;

TEST_CASE("golden values serialize as four integers") {
  const Golden phi = Golden::phi();
  CHECK(to_json(phi).dump() == "[1,2,1,2]");
  CHECK(to_json(Golden(-3)).dump() == "[-3,1,0,1]");
  CHECK(golden_from_json(to_json(phi)) == phi);
  const Golden big = Golden(Rational(mpz_class("123456789012345678901234567890"), 7));
  CHECK(to_json(big)[0].is_string());
  CHECK(golden_from_json(to_json(big)) == big);
  CHECK_THROWS_AS(golden_from_json(Json::array({1, 0, 0, 1})), InvalidArgument);
  CHECK_THROWS_AS(golden_from_json(Json::array({1, 2})), InvalidArgument);
}

TEST_CASE("polynomial and field round trips") {
  for (auto name : all_superflows()) {
    CAPTURE(to_string(name));
    const auto s = build_superflow(name);
    const auto j = to_json(s.field);
    const auto back = field_from_json(j);
    for (int i = 0; i < 3; ++i) CHECK(back.numerator(i) == s.field.numerator(i));
    CHECK(back.denominator() == s.field.denominator());
    for (const auto& f : s.first_integrals) CHECK(poly_from_json(to_json(f)) == f);
  }
}

TEST_CASE("term layout is exponents followed by the two rational parts") {
  auto vars = make_vars({"x", "y", "z"});
  auto p = MultiPoly<Golden>::monomial(vars, {1, 0, 2}, Golden(Rational(1, 2), Rational(-3, 4)));
  const auto j = to_json(p);
  CHECK(j["vars"].dump() == R"(["x","y","z"])");
  CHECK(j["terms"].dump() == "[[1,0,2,1,2,-3,4]]");
}

TEST_CASE("group dump lists every element row-major") {
  const auto g = std::get<MatrixGroup<Golden>>(build_catalog_group(parse_group_spec("T_hat")));
  const auto j = to_json(g);
  CHECK(j["order"] == 24);
  CHECK(j["dim"] == 3);
  CHECK(j["elements"].size() == 24);
  CHECK(j["elements"][0].size() == 9);
  const auto c = std::get<MatrixGroup<Cyclotomic>>(build_catalog_group(parse_group_spec("prism:3")));
  CHECK(to_json(c)["elements"].size() == 12);
}

TEST_CASE("floats print with 17 significant digits and output is stable") {
  Json j{{"a", 0.1}, {"b", Json::array({1.0 / 3, 2})}, {"c", "s"}};
  const auto text = dump_json(j);
  CHECK(text.find("0.10000000000000001") != std::string::npos);
  CHECK(text.find("0.33333333333333331") != std::string::npos);
  CHECK(dump_json(j) == text);
  CHECK(dump_json(Json::parse(text)) == text);
  CHECK(dump_json(Json{{"n", std::nan("")}}, 0) == R"({"n":null})");
}

TEST_CASE("exact expression parsing") {
  const Golden phi = Golden::phi();
  CHECK(parse_golden("-phi^3/6") == -phi.pow(3) / Golden(6));
  CHECK(parse_golden("1/20") == Golden(Rational(1, 20)));
  CHECK(parse_golden("-0.05") == Golden(Rational(-1, 20)));
  CHECK(parse_golden("0.8") == Golden(Rational(4, 5)));
  CHECK(parse_golden("1e-10") == Golden(Rational(mpz_class(1), mpz_class("10000000000"))));
  CHECK(parse_golden("2.5E2") == Golden(250));
  CHECK(parse_golden("(2 + sqrt5)/5") == Golden(Rational(2, 5), Rational(1, 5)));
  CHECK(parse_golden("phi^-1") == phi - Golden(1));
  CHECK(parse_golden("2*phi - 1") == Golden::sqrt5());
  for (const char* bad : {"", "1/0", "phi^", "(1", "1..2", "x", "1e"}) {
    CAPTURE(bad);
    CHECK_THROWS_AS(parse_golden(bad), InvalidArgument);
  }
}

TEST_CASE("random polynomials survive a round trip") {
  std::mt19937 rng(5);
  std::uniform_int_distribution<int> e(0, 4), c(-50, 50), d(1, 9);
  auto vars = make_vars({"x", "y"});
  for (int k = 0; k < 50; ++k) {
    MultiPoly<Golden> p(vars);
    for (int t = 0; t < 6; ++t) p += MultiPoly<Golden>::monomial(vars, {e(rng), e(rng)}, Golden(Rational(c(rng), d(rng)), Rational(c(rng), d(rng))));
    CHECK(poly_from_json(Json::parse(dump_json(to_json(p)))) == p);
  }
}
