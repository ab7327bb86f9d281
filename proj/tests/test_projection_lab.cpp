#include <doctest.h>

#include <cmath>
#include <filesystem>
#include <random>

#include "superflow/errors.hpp"
#include "superflow/fixed_points.hpp"
#include "superflow/projection_lab.hpp"

using namespace superflow;

namespace {

const double kPhi = (1 + std::sqrt(5.0)) / 2;
const double kPi = 3.14159265358979323846;

const Superflow& flow(SuperflowName n) {
  static const Superflow I = build_superflow(SuperflowName::I), O = build_superflow(SuperflowName::O),
                         T = build_superflow(SuperflowName::T_hat), A4 = build_superflow(SuperflowName::A4);
  switch (n) {
    case SuperflowName::I: return I;
    case SuperflowName::O: return O;
    case SuperflowName::A4: return A4;
    default: return T;
  }
}

Point3 random_unit(std::mt19937& rng) {
  std::normal_distribution<double> g;
  Point3 x{g(rng), g(rng), g(rng)};
  const double r = std::sqrt(x[0] * x[0] + x[1] * x[1] + x[2] * x[2]);
  for (double& c : x) c /= r;
  return x;
}

const CircleImage& find(const std::vector<CircleImage>& cs, const std::string& label) {
  for (const auto& c : cs)
    if (c.label == label) return c;
  throw InvalidArgument(label);
}

}  // namespace

TEST_CASE("stereographic map examples") {
  const auto o = stereo_map({0, 0, -1});
  CHECK(o[0] == 0.0);
  CHECK(o[1] == 0.0);
  const auto s = stereo_inverse({0, 0});
  CHECK(s[2] == -1.0);
  CHECK_THROWS_AS(stereo_map({0, 0, 1}), InvalidArgument);

  std::mt19937 rng(3);
  std::uniform_real_distribution<double> u(-10, 10);
  double norm_err = 0, trip = 0;
  for (int k = 0; k < 500; ++k) {
    const Point2 ab{u(rng), u(rng)};
    const auto x = stereo_inverse(ab);
    norm_err = std::max(norm_err, std::abs(x[0] * x[0] + x[1] * x[1] + x[2] * x[2] - 1));
    const auto back = stereo_map(x);
    trip = std::max(trip, std::hypot(back[0] - ab[0], back[1] - ab[1]) / std::max(1.0, std::hypot(ab[0], ab[1])));
  }
  CHECK(norm_err <= 1e-14);
  CHECK(trip <= 1e-14);
}

TEST_CASE("orthogonal charts") {
  const auto x = orthogonal_x0_inverse({0.4, -1.2});
  CHECK(x[0] * x[0] - x[1] * x[1] == doctest::Approx(1).epsilon(1e-15));
  const auto d = orthogonal_diag_inverse({0.7, 0.2});
  CHECK(d[0] * d[0] - d[1] * d[1] == doctest::Approx(1).epsilon(1e-14));
  const auto back = orthogonal_diag_map(d);
  CHECK(back[0] == doctest::Approx(0.7).epsilon(1e-15));
  CHECK_THROWS_AS(orthogonal_diag_inverse({0, 1}), InvalidArgument);
}

TEST_CASE("projected tetrahedral evaluators match the displayed formulas") {
  const auto x0 = project_field(flow(SuperflowName::T_hat), ProjectionKind::orthogonal_x0);
  const auto dg = project_field(flow(SuperflowName::T_hat), ProjectionKind::orthogonal_diag);
  std::mt19937 rng(8);
  std::uniform_real_distribution<double> u(-3, 3);
  for (int k = 0; k < 50; ++k) {
    const double a = u(rng), b = u(rng);
    const auto v = x0({a, b});
    CHECK(v[0] == doctest::Approx(b * std::sqrt(1 + a * a)).epsilon(1e-13));
    CHECK(v[1] == doctest::Approx(a * std::sqrt(1 + a * a)).epsilon(1e-13));
    const auto w = dg({a, b});
    CHECK(w[0] == doctest::Approx(a * b).epsilon(1e-13));
    CHECK(w[1] == doctest::Approx(a * a - 1 / (16 * a * a)).epsilon(1e-13));
  }
  const auto at0 = x0({0, 0.8});
  CHECK(at0[0] == doctest::Approx(0.8));
  CHECK(at0[1] == 0.0);
}

TEST_CASE("projection kind compatibility") {
  CHECK_THROWS_AS(project_field(flow(SuperflowName::T_hat), ProjectionKind::stereographic_true), InvalidArgument);
  CHECK_THROWS_AS(project_field(flow(SuperflowName::I), ProjectionKind::orthogonal_x0), InvalidArgument);
  CHECK_NOTHROW(project_field(flow(SuperflowName::O), ProjectionKind::stereographic_scaled));
  CHECK(parse_projection_kind("scaled") == ProjectionKind::stereographic_scaled);
  CHECK_THROWS_AS(parse_projection_kind("oblique"), InvalidArgument);
}

TEST_CASE("true field is the scaled field times (a^2 + b^2 + 4)/8") {
  const auto s = project_field(flow(SuperflowName::I), ProjectionKind::stereographic_scaled);
  const auto t = project_field(flow(SuperflowName::I), ProjectionKind::stereographic_true);
  for (const Point2 p : {Point2{0.3, 0.1}, Point2{-2, 5}, Point2{6, -6}}) {
    const double k = (p[0] * p[0] + p[1] * p[1] + 4) / 8;
    CHECK(t(p)[0] == doctest::Approx(k * s(p)[0]).epsilon(1e-14));
    CHECK(t(p)[1] == doctest::Approx(k * s(p)[1]).epsilon(1e-14));
  }
}

TEST_CASE("scaled icosahedral field vanishes at the 61 visible fixed points") {
  const auto pf = project_field(flow(SuperflowName::I), ProjectionKind::stereographic_scaled);
  const auto fps = enumerate_fixed_points(flow(SuperflowName::I));
  int visible = 0;
  double worst = 0;
  for (const auto& fp : fps) {
    const auto u = fp.unit_direction();
    if (u[2] > 1 - 1e-12) continue;
    ++visible;
    const auto v = pf(stereo_map(u));
    worst = std::max(worst, std::hypot(v[0], v[1]));
  }
  CHECK(visible == 61);
  CHECK(worst <= 1e-12);
}

TEST_CASE("zeros of the scaled field map back to sphere zeros") {
  // Newton from a grid of seeds; every converged zero is a fixed point image.
  const auto pf = project_field(flow(SuperflowName::I), ProjectionKind::stereographic_scaled);
  const auto fps = enumerate_fixed_points(flow(SuperflowName::I));
  int converged = 0;
  for (double a = -6.5; a <= 6.5; a += 1.3)
    for (double b = -6.5; b <= 6.5; b += 1.3) {
      Point2 p{a, b};
      bool ok = false;
      for (int it = 0; it < 60; ++it) {
        const auto v = pf(p);
        if (std::hypot(v[0], v[1]) < 1e-13) {
          ok = true;
          break;
        }
        const double h = 1e-7;
        const auto va = pf({p[0] + h, p[1]}), vb = pf({p[0], p[1] + h});
        const double j11 = (va[0] - v[0]) / h, j21 = (va[1] - v[1]) / h, j12 = (vb[0] - v[0]) / h,
                     j22 = (vb[1] - v[1]) / h;
        const double det = j11 * j22 - j12 * j21;
        if (std::abs(det) < 1e-300) break;
        p = {p[0] - (j22 * v[0] - j12 * v[1]) / det, p[1] - (-j21 * v[0] + j11 * v[1]) / det};
        if (!std::isfinite(p[0]) || std::hypot(p[0], p[1]) > 1e4) break;
      }
      if (!ok) continue;
      ++converged;
      const auto x = stereo_inverse(p);
      double best = INFINITY;
      for (const auto& fp : fps) {
        const auto u = fp.unit_direction();
        best = std::min(best, std::sqrt(std::pow(u[0] - x[0], 2) + std::pow(u[1] - x[1], 2) + std::pow(u[2] - x[2], 2)));
      }
      CHECK(best <= 1e-8);
    }
  CHECK(converged > 20);
}

TEST_CASE("projection contract: true kind") {
  std::mt19937 rng(21);
  for (int k = 0; k < 6; ++k) {
    auto x = random_unit(rng);
    if (x[2] > 0.8) x[2] = -x[2];
    const auto r = verify_projection_contract(flow(SuperflowName::I), ProjectionKind::stereographic_true, x, 0.05);
    CHECK(r.residual <= 1e-6);
    CHECK_FALSE(r.orbit_distance);
  }
  const auto r = verify_projection_contract(flow(SuperflowName::O), ProjectionKind::stereographic_true,
                                            {0.6, 0.0, -0.8}, 0.1);
  CHECK(r.residual <= 1e-6);
}

TEST_CASE("projection contract: scaled kind is orbit equality") {
  std::mt19937 rng(22);
  double moved = 0;
  for (int k = 0; k < 4; ++k) {
    auto x = random_unit(rng);
    if (x[2] > 0.8) x[2] = -x[2];
    const auto r = verify_projection_contract(flow(SuperflowName::I), ProjectionKind::stereographic_scaled, x, 0.1);
    CHECK(r.orbit_distance);
    CHECK(r.residual <= 1e-6);
    const auto a = stereo_map(x);
    moved = std::max(moved, std::hypot(r.projected[0] - a[0], r.projected[1] - a[1]));
  }
  CHECK(moved > 1e-3);
}

TEST_CASE("projection contract: orthogonal kinds and fixed points") {
  for (auto k : {ProjectionKind::orthogonal_x0, ProjectionKind::orthogonal_diag}) {
    const double y = 0.4;
    const auto r = verify_projection_contract(flow(SuperflowName::T_hat), k, {std::sqrt(1 + y * y), y, 0.7}, 0.08);
    CHECK(r.residual <= 1e-6);
  }
  // (1,0,0) is a zero of the tetrahedral field on x^2 - y^2 = 1.
  const auto r = verify_projection_contract(flow(SuperflowName::T_hat), ProjectionKind::orthogonal_x0, {1, 0, 0}, 0.1);
  CHECK(r.projected[0] == 0.0);
  CHECK(r.planar[0] == 0.0);
  const double s = std::sqrt(kPhi * kPhi + 1);
  const auto q = verify_projection_contract(flow(SuperflowName::I), ProjectionKind::stereographic_scaled,
                                            {kPhi / s, 1 / s, 0}, 0.1);
  CHECK(q.residual <= 1e-12);
  CHECK_THROWS_AS(verify_projection_contract(flow(SuperflowName::I), ProjectionKind::stereographic_true, {1, 1, 0}, 0.05),
                  InvalidArgument);
  CHECK_THROWS_AS(verify_projection_contract(flow(SuperflowName::I), ProjectionKind::stereographic_true, {1, 0, 0}, 0.5),
                  InvalidArgument);
}

TEST_CASE("great circle images: fitted against derived values") {
  const auto cs = singular_circle_images();
  REQUIRE(cs.size() == 10);
  for (const auto& c : cs) {
    INFO(c.label);
    CHECK(c.fit_residual <= 1e-10);
    CHECK(std::hypot(c.center[0] - c.exact_center[0], c.center[1] - c.exact_center[1]) <= 1e-10);
    CHECK(std::abs(c.radius - c.exact_radius) <= 1e-10);
  }
  const auto& z = find(cs, "I: z = phi y");
  CHECK(z.center[1] == doctest::Approx(2 * kPhi).epsilon(1e-12));
  CHECK(z.radius == doctest::Approx(2 * std::sqrt(kPhi * kPhi + 1)).epsilon(1e-12));
  const auto& o = find(cs, "O: x + y + z = 0");
  CHECK(o.center[0] == doctest::Approx(-2).epsilon(1e-12));
  CHECK(o.radius == doctest::Approx(std::sqrt(12.0)).epsilon(1e-12));
  // x = phi z: the image radius is 2 phi^-1 sqrt(phi^2 + 1), twice the stated value.
  const auto& x = find(cs, "I: x = phi z");
  CHECK(x.radius == doctest::Approx(2 / kPhi * std::sqrt(kPhi * kPhi + 1)).epsilon(1e-12));
  CHECK(x.radius == doctest::Approx(2 * x.stated_radius).epsilon(1e-12));
  // Planes through the pole give lines through the origin; y = phi x maps to beta = phi alpha.
  const auto& l = find(cs, "I: y = phi x");
  CHECK(l.is_line);
  CHECK(l.center[1] / l.center[0] == doctest::Approx(kPhi).epsilon(1e-12));
}

TEST_CASE("great circle image of a generic plane") {
  const auto c = great_circle_image({0.3, -0.2, 0.9});
  CHECK(c.fit_residual <= 1e-10);
  CHECK(std::abs(c.radius - c.exact_radius) <= 1e-10);
  CHECK_THROWS_AS(great_circle_image({0, 0, 0}), InvalidArgument);
}

TEST_CASE("orbit equation of the diagonal field") {
  CHECK(orbit_equation_numerator().is_zero());
  CHECK(std::abs(orbit_equation_check(0.5, 0.3)) <= 1e-12);
  std::mt19937 rng(4);
  std::uniform_real_distribution<double> u(-4, 4);
  for (int k = 0; k < 100; ++k) {
    double a = u(rng);
    if (std::abs(a) < 0.05) continue;
    CHECK(std::abs(orbit_equation_check(a, u(rng))) <= 1e-9 * (1 + std::pow(a, 4) + 1 / std::pow(a, 4)));
  }
  CHECK_THROWS_AS(orbit_equation_check(0, 1), InvalidArgument);
}

TEST_CASE("hyperbolas are orbits of the x = 0 projection") {
  const auto f = project_field(flow(SuperflowName::T_hat), ProjectionKind::orthogonal_x0);
  for (const Point2 p : {Point2{0.3, 0.2}, Point2{-1.5, 2}, Point2{2, -0.1}}) {
    const auto v = f(p);
    CHECK(std::abs(2 * p[0] * v[0] - 2 * p[1] * v[1]) <= 1e-13);
  }
}

TEST_CASE("embedding planar flows as projective flows") {
  using P = MultiPoly<Golden>;
  auto vars = make_vars({"alpha", "beta"});
  auto g = P::generators(vars);
  const P one = P::constant(vars, Golden(1));

  const auto c = embed_flow_as_projective(RationalVF<Golden>({one, one}, one, false));
  auto h = P::generators(c.vars());
  CHECK(c.dim() == 3);
  CHECK((c.numerator(0) * c.denominator().constant_term().inverse() - h[2] * h[2]).is_zero());
  CHECK(c.numerator(2).is_zero());

  // (a b, a^2 - 1/(16 a^2)) over the common denominator 16 a^2.
  const P D = Golden(16) * g[0] * g[0];
  const RationalVF<Golden> albe({D * g[0] * g[1], Golden(16) * g[0].pow(4) - one}, D, false);
  const auto e = embed_flow_as_projective(albe);
  CHECK(e.is_two_homogeneous());
  CHECK(e.numerator(2).is_zero());
  for (const Point2 p : {Point2{0.5, 0.3}, Point2{-1.2, 2.0}}) {
    const auto v = e.evaluate_double({p[0], p[1], 1.0});
    CHECK(v[0] == doctest::Approx(p[0] * p[1]).epsilon(1e-14));
    CHECK(v[1] == doctest::Approx(p[0] * p[0] - 1 / (16 * p[0] * p[0])).epsilon(1e-14));
    CHECK(v[2] == 0.0);
    // 2-homogeneity: V(l x) = l^2 V(x).
    const auto w = e.evaluate_double({3 * p[0], 3 * p[1], 3.0});
    CHECK(w[0] == doctest::Approx(9 * v[0]).epsilon(1e-13));
  }
}

TEST_CASE("figure reproduction") {
  const auto f2 = build_figure(FigureKind::fig2, 15);
  CHECK(f2.boundary_curves == 6);
  CHECK(count_svg_class(f2.svg, "glyph") > 200);
  CHECK(f2.csv.rfind("alpha,beta,Pi,Theta\n", 0) == 0);
  CHECK(build_figure(FigureKind::fig3, 9).boundary_curves == 6);
  CHECK(build_figure(FigureKind::fig4, 9).boundary_curves == 4);

  const auto q = build_figure(FigureKind::quadratic_deformation, 9);
  CHECK(q.closed_curves.size() == 7);
  CHECK(count_svg_class(q.svg, "closed-curve") == 7);
  CHECK(count_svg_class(q.svg, "orbit") == 1);
  for (double a : q.areas) CHECK(std::abs(a - kPi) <= 0.01 * kPi);
  // The deformation is visible: the last curve is no longer the unit circle.
  double dev = 0;
  for (const auto& p : q.closed_curves.back()) dev = std::max(dev, std::abs(std::hypot(p[0], p[1]) - 1));
  CHECK(dev > 0.05);
  // The open orbit stays on x^3 y - x y^3 = 0.05.
  for (const auto& p : q.open_orbit) CHECK(std::abs(p[0] * p[0] * p[0] * p[1] - p[0] * p[1] * p[1] * p[1] - 0.05) <= 1e-8);
}

TEST_CASE("figure emission writes files") {
  const std::string prefix = (std::filesystem::temp_directory_path() / "superflow_fig4_out").string();
  const auto d = emit_figure_data(FigureKind::fig4, 5, prefix);
  CHECK(d.boundary_curves == 4);
  CHECK(std::filesystem::exists(prefix + ".svg"));
  CHECK(std::filesystem::exists(prefix + ".csv"));
  std::filesystem::remove(prefix + ".svg");
  std::filesystem::remove(prefix + ".csv");
  CHECK_THROWS_AS(emit_figure_data(FigureKind::fig4, 5, "/nonexistent_dir/x"), IoError);
  CHECK_THROWS_AS(build_figure(FigureKind::fig2, 1), InvalidArgument);
  CHECK(parse_figure_kind("quadratic-deformation") == FigureKind::quadratic_deformation);
}
