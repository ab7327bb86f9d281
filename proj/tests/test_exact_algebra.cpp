#include <doctest.h>

#include <cmath>
#include <random>

#include "superflow/errors.hpp"
#include "superflow/linsolve.hpp"
#include "superflow/ratvf.hpp"
#include "test_support.hpp"

using namespace superflow;
using superflow::testing::random_golden;
using superflow::testing::random_nonzero_golden;
using superflow::testing::random_rational;

namespace {

using GPoly = MultiPoly<Golden>;

std::vector<GPoly> xyz() { return GPoly::generators(xyz_vars()); }

}  // namespace

TEST_CASE("golden arithmetic examples") {
  Golden phi = Golden::phi();
  CHECK(phi * (phi - 1) == Golden(1));
  CHECK(Golden::sqrt5() + (-Golden::sqrt5()) == Golden(0));
  CHECK((Golden(2) + Golden::sqrt5()).inverse() == Golden(-2, 1));
  CHECK(phi * phi - phi - 1 == Golden(0));
  CHECK_THROWS_AS(Golden(0).inverse(), DivisionByZero);
  CHECK(Golden(Rational(2, 4), Rational(-3, 6)).rational_part() == Rational(1, 2));
  CHECK(Golden(Rational(6, -4)).rational_part().get_den() == 2);
}

TEST_CASE("golden sign and double") {
  CHECK(Golden(-2, 1).sign() == 1);
  CHECK(Golden(2, -1).sign() == -1);
  CHECK(Golden(0).sign() == 0);
  CHECK(Golden(Rational(9, 4), -1).sign() == 1);
  CHECK(Golden::phi().to_double() == doctest::Approx((1 + std::sqrt(5.0)) / 2).epsilon(1e-15));
}

TEST_CASE("golden conjugate examples") {
  CHECK(golden_conjugate(Golden::phi()) == Golden(Rational(1, 2), Rational(-1, 2)));
  CHECK(golden_conjugate(Golden(3)) == Golden(3));
  Golden x(Rational(7, 3), Rational(-2, 5));
  CHECK(golden_conjugate(golden_conjugate(x)) == x);
}

TEST_CASE("golden field axioms on random triples") {
  std::mt19937 rng(11);
  for (int i = 0; i < 200; ++i) {
    Golden a = random_golden(rng), b = random_golden(rng), c = random_golden(rng);
    CHECK((a * b) * c == a * (b * c));
    CHECK((a + b) + c == a + (b + c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a * b == b * a);
    Golden n = random_nonzero_golden(rng);
    CHECK(n * n.inverse() == Golden(1));
    CHECK(golden_conjugate(a * b) == golden_conjugate(a) * golden_conjugate(b));
    CHECK(golden_conjugate(a + b) == golden_conjugate(a) + golden_conjugate(b));
    CHECK((a * b).to_double() == doctest::Approx(a.to_double() * b.to_double()).epsilon(1e-12));
  }
}

TEST_CASE("golden pow") {
  Golden phi = Golden::phi();
  // phi^n = F(n) phi + F(n-1)
  CHECK(phi.pow(10) == phi * Golden(55) + Golden(34));
  CHECK(phi.pow(-1) == phi - 1);
  CHECK(phi.pow(0) == Golden(1));
}

TEST_CASE("cyclotomic basics") {
  auto f = make_cyclotomic_field(24);
  CHECK(f->degree() == 8);
  Cyclotomic z = Cyclotomic::zeta(f, 1);
  CHECK(z.pow(24) == Cyclotomic(1));
  CHECK(!(z.pow(12) == Cyclotomic(1)));
  CHECK(z.pow(12) == Cyclotomic(-1));
  Cyclotomic i = Cyclotomic::imaginary_unit(f);
  CHECK(i * i == Cyclotomic(-1));
  Cyclotomic r2 = Cyclotomic::sqrt2(f);
  CHECK(r2 * r2 == Cyclotomic(2));
  Cyclotomic c = Cyclotomic::cos_pi(f, 1, 6);  // sqrt3 / 2
  CHECK(c * c == Cyclotomic(Rational(3, 4)));
  Cyclotomic s = Cyclotomic::sin_pi(f, 1, 6);
  CHECK(s == Cyclotomic(Rational(1, 2)));
  CHECK(c.is_rational() == false);
  CHECK(std::abs(c.to_complex() - std::complex<double>(std::sqrt(3.0) / 2, 0)) < 1e-14);
  CHECK(z.complex_conjugate() == z.inverse());
  CHECK(i.complex_conjugate() == -i);
}

TEST_CASE("cyclotomic sqrt5 and golden embedding") {
  auto f = make_cyclotomic_field(40);
  Cyclotomic r5 = Cyclotomic::sqrt5(f);
  CHECK(r5 * r5 == Cyclotomic(5));
  CHECK(std::abs(r5.to_complex() - std::complex<double>(std::sqrt(5.0), 0)) < 1e-13);
  Cyclotomic phi = to_cyclotomic(Golden::phi(), f);
  CHECK(phi * phi - phi - Cyclotomic(1) == Cyclotomic(0));
  CHECK_THROWS_AS(to_cyclotomic(Golden::phi(), make_cyclotomic_field(8)), InvalidArgument);
  CHECK(to_cyclotomic(Golden(3), make_cyclotomic_field(8)) == Cyclotomic(3));
}

TEST_CASE("cyclotomic field axioms on random elements") {
  std::mt19937 rng(5);
  auto f = make_cyclotomic_field(16);
  auto rnd = [&] {
    std::vector<Rational> c(8);
    for (auto& v : c) v = random_rational(rng, 4);
    return Cyclotomic(f, c);
  };
  for (int k = 0; k < 40; ++k) {
    Cyclotomic a = rnd(), b = rnd(), c = rnd();
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    if (!a.is_zero()) CHECK(a * a.inverse() == Cyclotomic(1));
    CHECK((a * b).complex_conjugate() == a.complex_conjugate() * b.complex_conjugate());
    auto za = a.to_complex(), zb = b.to_complex();
    CHECK(std::abs((a * b).to_complex() - za * zb) < 1e-9 * (1 + std::abs(za * zb)));
  }
}

TEST_CASE("matrix inverse and orthogonality") {
  ExactMatrix<Golden> m(3, 3);
  m << 2, 1, 0, 0, 1, 0, 1, 0, 1;
  auto inv = exact_inverse<Golden>(m);
  CHECK(is_identity<Golden>(m * inv));
  ExactMatrix<Golden> sing = ExactMatrix<Golden>::Zero(2, 2);
  CHECK_THROWS_AS(exact_inverse<Golden>(sing), SingularMatrix);
  ExactMatrix<Golden> swap(3, 3);
  swap << 0, 1, 0, 1, 0, 0, 0, 0, 1;
  CHECK(is_orthogonal<Golden>(swap));
  CHECK(!is_orthogonal<Golden>(m));
}

TEST_CASE("poly_compose_linear examples") {
  auto v = xyz();
  const auto &x = v[0], &y = v[1], &z = v[2];
  GPoly w = x * x + y * y + z * z;
  ExactMatrix<Golden> swap(3, 3);
  swap << 0, 1, 0, 1, 0, 0, 0, 0, 1;
  CHECK(w.compose_linear(swap) == w);
  CHECK(x.compose_linear(swap) == y);
  ExactMatrix<Golden> d = ExactMatrix<Golden>::Zero(3, 3);
  d(0, 0) = 2;
  d(1, 1) = 3;
  d(2, 2) = 1;
  CHECK((x * y).compose_linear(d) == x * y * Golden(6));
  ExactMatrix<Golden> bad = ExactMatrix<Golden>::Identity(2, 2);
  CHECK_THROWS_AS(w.compose_linear(bad), DimensionMismatch);

  // A rotation with golden entries keeps W.
  Golden phi = Golden::phi();
  Golden h(Rational(1, 2));
  ExactMatrix<Golden> g(3, 3);
  g << h, -phi * h, (phi * 2).inverse(), phi * h, (phi * 2).inverse(), -h, (phi * 2).inverse(), h, phi * h;
  REQUIRE(is_orthogonal<Golden>(g));
  CHECK(w.compose_linear(g) == w);
}

TEST_CASE("compose_linear round trip on random polynomials") {
  std::mt19937 rng(3);
  auto v = xyz();
  for (int k = 0; k < 10; ++k) {
    GPoly p(xyz_vars());
    for (int t = 0; t < 6; ++t) {
      std::uniform_int_distribution<int> e(0, 3);
      p += GPoly::monomial(xyz_vars(), {e(rng), e(rng), e(rng)}, random_golden(rng));
    }
    ExactMatrix<Golden> m(3, 3);
    do {
      for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) m(i, j) = random_golden(rng);
    } while (true && [&] {
      try {
        exact_inverse<Golden>(m);
        return false;
      } catch (const SingularMatrix&) {
        return true;
      }
    }());
    auto back = p.compose_linear(m).compose_linear(exact_inverse<Golden>(m));
    CHECK(back == p);
    CHECK(p.compose_linear(m).degree() == p.degree());
  }
}

TEST_CASE("polynomial arithmetic") {
  auto v = xyz();
  const auto &x = v[0], &y = v[1];
  GPoly p = (x + y).pow(3);
  CHECK(p.coefficient({2, 1, 0}) == Golden(3));
  CHECK(p.is_homogeneous(3));
  CHECK(p.homogeneous_degree() == 3);
  CHECK((p + x).homogeneous_degree() == -1);
  CHECK(p.derivative(0) == (x + y).pow(2) * Golden(3));
  CHECK((p - p).is_zero());
  CHECK(p.evaluate({Golden(1), Golden::phi(), Golden(7)}) == (Golden(1) + Golden::phi()).pow(3));
  CHECK(p.evaluate_double({1.0, 2.0, 0.0}) == doctest::Approx(27.0));
  auto q = exact_divide(p, x + y);
  REQUIRE(q);
  CHECK(*q == (x + y).pow(2));
  CHECK(!exact_divide(p + x, x + y));
  // Constants without variables combine with any ring.
  GPoly c = GPoly() + GPoly::constant(xyz_vars(), Golden(2));
  CHECK(c.constant_term() == Golden(2));
}

TEST_CASE("substitute into another ring") {
  auto vars = make_vars({"s", "t"});
  auto st = GPoly::generators(vars);
  auto v = xyz();
  GPoly p = v[0] * v[1] + v[2];
  GPoly r = p.substitute({st[0], st[1], st[0] * st[1]});
  CHECK(r == st[0] * st[1] * Golden(2));
  CHECK(r.num_vars() == 2);
}

TEST_CASE("vf_divergence and vf_curl examples") {
  auto v = xyz();
  const auto &x = v[0], &y = v[1], &z = v[2];
  auto t = RationalVF<Golden>::polynomial({y * z, x * z, x * y});
  CHECK(divergence(t).is_zero());
  for (const auto& c : curl(t)) CHECK(c.is_zero());

  auto sq = RationalVF<Golden>::polynomial({x * x, GPoly(xyz_vars()), GPoly(xyz_vars())});
  auto dv = divergence(sq);
  CHECK(dv.num == x * Golden(2));
  CHECK(dv.den == GPoly::constant(xyz_vars(), Golden(1)));

  auto grad = RationalVF<Golden>::polynomial({x * x, y * y, z * z});
  for (const auto& c : curl(grad)) CHECK(c.is_zero());

  auto rot = RationalVF<Golden>::polynomial({-(y * z), x * z, GPoly(xyz_vars())});
  auto cr = curl(rot);
  CHECK(!cr[2].is_zero());
  CHECK(cr[2].num == z * Golden(2));

  auto planar = RationalVF<Golden>::polynomial({y * y, x * x, GPoly(xyz_vars())});
  REQUIRE_THROWS_AS(RationalVF<Golden>::polynomial({y, x, GPoly(xyz_vars())}), InvalidArgument);
  auto two_d = RationalVF<Golden>(std::vector<GPoly>{x * x, y * y}, GPoly::constant(xyz_vars(), Golden(1)));
  CHECK_THROWS_AS(curl(two_d), DimensionMismatch);
  (void)planar;
}

TEST_CASE("rational divergence against finite differences") {
  // (x^3 - 3xy^2)/z, (y^3 - 3yx^2)/z, xyz/(x^2+y^2+z^2)-style numerators.
  auto v = xyz();
  const auto &x = v[0], &y = v[1], &z = v[2];
  GPoly w = x * x + y * y + z * z;
  RationalVF<Golden> f({x.pow(4) + y * z.pow(3) * Golden(2), x * y * z * z, z.pow(4) - x * x * y * y * Golden::phi()}, w);
  auto dv = divergence(f);
  std::mt19937 rng(9);
  for (int k = 0; k < 20; ++k) {
    auto p = superflow::testing::random_point(rng, 3);
    double h = 1e-5, fd = 0.0;
    for (int i = 0; i < 3; ++i) {
      auto a = p, b = p;
      a[i] += h;
      b[i] -= h;
      fd += (f.evaluate_double(a)[i] - f.evaluate_double(b)[i]) / (2 * h);
    }
    double exact = dv.num.evaluate_double(p) / dv.den.evaluate_double(p);
    CHECK(std::abs(fd - exact) <= 1e-6 * (1 + std::abs(exact)));
  }
}

TEST_CASE("2-homogeneity of fields on random scalings") {
  auto v = xyz();
  const auto &x = v[0], &y = v[1], &z = v[2];
  RationalVF<Golden> f({y.pow(3), -x.pow(3), GPoly(xyz_vars())}, z);
  CHECK(f.is_two_homogeneous());
  std::mt19937 rng(1);
  for (int k = 0; k < 20; ++k) {
    Golden lam = random_nonzero_golden(rng);
    std::vector<Golden> p{random_golden(rng), random_golden(rng), random_nonzero_golden(rng)};
    std::vector<Golden> q{p[0] * lam, p[1] * lam, p[2] * lam};
    auto a = f.evaluate(q), b = f.evaluate(p);
    for (int i = 0; i < 3; ++i) CHECK(a[i] == b[i] * lam * lam);
  }
}

TEST_CASE("conjugation_action identity and swap") {
  auto v = xyz();
  const auto &x = v[0], &y = v[1], &z = v[2];
  auto t = RationalVF<Golden>::polynomial({y * z, x * z, x * y});
  ExactMatrix<Golden> id = ExactMatrix<Golden>::Identity(3, 3);
  CHECK(fields_equal(conjugation_action(t, id), t));
  ExactMatrix<Golden> swap(3, 3);
  swap << 0, 1, 0, 1, 0, 0, 0, 0, 1;
  CHECK(fields_equal(conjugation_action(t, swap), t));
  auto a4 = RationalVF<Golden>({x.pow(3) - x * y * y * Golden(3), y.pow(3) - y * x * x * Golden(3), GPoly(xyz_vars())}, z);
  auto scaled = a4.scaled(Golden(-3, 2));
  auto c = proportionality_factor(scaled, a4);
  REQUIRE(c);
  CHECK(*c == Golden(-3, 2));
  CHECK(!proportionality_factor(t, a4));
}

TEST_CASE("sparse exact kernel") {
  // x + y + z = 0, x - y = 0 over Q(sqrt5).
  std::vector<SparseRow<Golden>> rows(2);
  rows[0] = {{0, Golden(1)}, {1, Golden(1)}, {2, Golden(1)}};
  rows[1] = {{0, Golden(1)}, {1, Golden(-1)}};
  auto k = exact_kernel(rows, 3);
  REQUIRE(k.size() == 1);
  CHECK(k[0][0] == k[0][1]);
  CHECK(k[0][0] + k[0][1] + k[0][2] == Golden(0));
  RrefBuilder<Golden> b(3);
  CHECK(b.add_row(rows[0]));
  CHECK(!b.add_row({{0, Golden(2)}, {1, Golden(2)}, {2, Golden(2)}}));
  CHECK(b.rank() == 1);
}

TEST_CASE("random kernel property") {
  std::mt19937 rng(21);
  for (int trial = 0; trial < 10; ++trial) {
    const int cols = 7;
    std::vector<SparseRow<Golden>> rows;
    for (int r = 0; r < 4; ++r) {
      SparseRow<Golden> row;
      for (int c = 0; c < cols; ++c)
        if (rng() % 2) row[c] = random_golden(rng);
      rows.push_back(row);
    }
    RrefBuilder<Golden> b(cols);
    for (const auto& r : rows) b.add_row(r);
    auto k = b.kernel();
    CHECK(static_cast<int>(k.size()) == cols - b.rank());
    for (const auto& vec : k)
      for (const auto& row : rows) {
        Golden acc(0);
        for (const auto& [c, val] : row) acc += val * vec[c];
        CHECK(acc.is_zero());
      }
  }
}
