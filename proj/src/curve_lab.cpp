#include "superflow/curve_lab.hpp"

#include <algorithm>
#include <cmath>

#include <unsupported/Eigen/Polynomials>

#include "superflow/compiled.hpp"
#include "superflow/errors.hpp"

namespace superflow {
namespace {

using G = Golden;
using P = MultiPoly<G>;

const double kPhi = (1 + std::sqrt(5.0)) / 2;

P cst(const VarList& v, const G& c) { return P::constant(v, c); }

/// Coefficient of X^n (variable 0) as a polynomial in the same ring.
P x_coefficient(const P& a, int n) {
  P::TermMap out;
  for (const auto& [e, c] : a.terms())
    if (e[0] == n) {
      auto f = e;
      f[0] = 0;
      out.emplace(f, c);
    }
  return P(a.vars(), std::move(out));
}

P x_power(const VarList& v, int k) {
  std::vector<int> e(v->size(), 0);
  e[0] = k;
  return P::monomial(v, e, G(1));
}

P upsilon_substitution_with(const P& a, int k, const P& u) {
  std::vector<P> upow{cst(a.vars(), 1)};
  P out(a.vars());
  for (int j = 0; j <= a.degree_in(0); ++j) {
    if (j > k) throw InvalidArgument("substitution degree below the X-degree of the polynomial");
    while (static_cast<int>(upow.size()) <= j) upow.push_back(upow.back() * u);
    P c = x_coefficient(a, j);
    if (!c.is_zero()) out += c * upow[j] * x_power(a.vars(), k - j);
  }
  return out;
}

std::optional<P> solve_preimage_with(const P& rhs, int k, const P& u) {
  P rem = rhs;
  P a(rhs.vars());
  std::vector<P> upow{cst(rhs.vars(), 1)};
  for (int j = 1; j <= k; ++j) upow.push_back(upow.back() * u);
  for (int j = k; j >= 0; --j) {
    P c = x_coefficient(rem, 2 * j + k);
    if (c.is_zero()) continue;
    a += c * x_power(rhs.vars(), j);
    rem -= c * upow[j] * x_power(rhs.vars(), k - j);
  }
  if (!rem.is_zero()) return std::nullopt;
  return a;
}

std::string first_term(const P& d) {
  if (d.is_zero()) return "";
  const auto& [e, c] = *d.terms().rbegin();
  return P::monomial(d.vars(), e, c).to_string();
}

IdentityCheck check(const std::string& name, const P& difference) {
  return {name, difference.is_zero(), first_term(difference)};
}

/// Chain of identities in the (X, xi) ring for a family and its U.
void chain_in_x(IdentityReport& r, const PolynomialFamily& fam, const P& u) {
  const P& X = x_power(fam.f.vars(), 1);
  r.checks.push_back(check("math-p", upsilon_substitution_with(fam.p, 4, u) - G(10) * fam.h * fam.h * fam.f * fam.g));
  r.checks.push_back(check("math-q", upsilon_substitution_with(fam.q, 9, u) - G(500) * fam.h.pow(6) * fam.g.pow(3)));
  r.checks.push_back(check("ties", upsilon_substitution_with(fam.l, 1, u) - G(2) * fam.f));
  r.checks.push_back(check("q=4t^3", fam.q - G(4) * fam.t.pow(3)));
  r.checks.push_back(check("p=l*t", fam.p - fam.l * fam.t));
  auto sp = solve_preimage_with(G(10) * fam.h * fam.h * fam.f * fam.g, 4, u);
  r.checks.push_back(sp ? check("p-recurrent", *sp - fam.p) : IdentityCheck{"p-recurrent", false, "no polynomial solution"});
  auto sq = solve_preimage_with(G(500) * fam.h.pow(6) * fam.g.pow(3), 9, u);
  r.checks.push_back(sq ? check("q-recurrent", *sq - fam.q) : IdentityCheck{"q-recurrent", false, "no polynomial solution"});
  // Upsilon' = h X' / X^2: d/dX of U / X times X^2 equals h.
  r.checks.push_back(check("upsilon-derivative", u.derivative(0) * X - u - fam.h));
}

void sphere_identities(IdentityReport& r) {
  auto v = xyz_vars();
  auto gens = P::generators(v);
  const P &p = gens[0], &q = gens[1], &rr = gens[2];
  const G phi = G::phi(), phi2 = phi * phi;
  const P Pp = phi2 * p * p - q * q, Qp = phi2 * q * q - rr * rr, Rp = phi2 * rr * rr - p * p;
  const G four_phi = G(4) * phi;
  r.checks.push_back(check("aha", four_phi * p * p - (phi2 * Pp + Qp + phi2.inverse() * Rp)));
  r.checks.push_back(check("aha-q", four_phi * q * q - (phi2.inverse() * Pp + phi2 * Qp + Rp)));
  r.checks.push_back(check("aha-r", four_phi * rr * rr - (Pp + phi2.inverse() * Qp + phi2 * Rp)));
  r.checks.push_back(check("rys-sum", Pp + Qp + Rp - phi * sphere_integral()));
  r.checks.push_back(check("rys-product", Pp * Qp * Rp - icosahedral_integral()));
  const P alpha = Pp * Pp * Qp + Qp * Qp * Rp + Rp * Rp * Pp;
  const P beta = Pp * Qp * Qp + Qp * Rp * Rp + Rp * Pp * Pp;
  const P cubes = Pp.pow(3) + Qp.pow(3) + Rp.pow(3);
  const P lhs = G(64) * phi2 * phi * p * p * q * q * rr * rr;
  r.checks.push_back(check("bas", lhs - (G(22) * Pp * Qp * Rp + cubes + (G(6) + phi) * alpha + (G(7) - phi) * beta)));
  r.checks.push_back(check("bas-split", lhs - (G(22) * Pp * Qp * Rp + cubes + G(Rational(13, 2)) * (alpha + beta) +
                                                G(0, Rational(1, 2)) * (alpha - beta))));
  // P' from the backward system p' = -N1, q' = -N2.
  const auto field = icosahedral_field();
  const P dp = -field.numerator(0), dq = -field.numerator(1);
  const P dP = G(2) * phi2 * p * dp - G(2) * q * dq;
  r.checks.push_back(check("P'-factor", dP - G(40, -8) * p * q * rr * Pp * (phi2 * q * q + p * p - (phi2 + G(1)) * rr * rr)));
}

void discriminant_identities(IdentityReport& r) {
  auto v = make_vars({"P", "Q", "R"});
  auto g = P::generators(v);
  const P &A = g[0], &B = g[1], &C = g[2];
  const P alpha = A * A * B + B * B * C + C * C * A, beta = A * B * B + B * C * C + C * A * A;
  const P disc = (A - B).pow(2) * (B - C).pow(2) * (C - A).pow(2);
  r.checks.push_back(check("alpha-beta", (alpha - beta).pow(2) - disc));
  const P phi = A + B + C, xi = A * B * C;
  const P rhs = (G(2) * A.pow(3) - phi * A * A + xi).pow(2) * (A.pow(3) - G(2) * phi * A * A + phi * phi * A - G(4) * xi);
  r.checks.push_back(check("discriminant-in-P", A.pow(3) * disc - rhs));
}

}  // namespace

PQRState pqr_transform(const std::array<double, 3>& x) {
  const double p2 = kPhi * kPhi;
  return {p2 * x[0] * x[0] - x[1] * x[1], p2 * x[1] * x[1] - x[2] * x[2], p2 * x[2] * x[2] - x[0] * x[0]};
}

std::array<double, 3> pqr_inverse(const PQRState& s) {
  const double p2 = kPhi * kPhi, ip2 = 1 / p2, c = 4 * kPhi;
  std::array<double, 3> out{(p2 * s.P + s.Q + ip2 * s.R) / c, (ip2 * s.P + p2 * s.Q + s.R) / c,
                            (s.P + ip2 * s.Q + p2 * s.R) / c};
  for (double& v : out) {
    if (v < -1e-12) throw InvalidArgument("point outside real locus");
    v = std::max(v, 0.0);
  }
  return out;
}

bool admissible_xi(double xi) { return xi > -(2 + std::sqrt(5.0)) / 5 && xi < (2 + std::sqrt(5.0)) / 27; }

VarList formal_curve_vars() {
  static const VarList v = make_vars({"X", "xi", "phi"});
  return v;
}

VarList curve_vars() {
  static const VarList v = make_vars({"X", "xi"});
  return v;
}

PolynomialFamily polynomial_family_formal() {
  auto g = P::generators(formal_curve_vars());
  const P &X = g[0], &xi = g[1], &phi = g[2];
  PolynomialFamily f;
  f.f = G(7) * phi * X.pow(3) - G(7) * phi * phi * X * X - (G(11) * xi + G(2) * phi.pow(3)) * X - G(7) * xi * phi;
  f.g = X.pow(3) - G(2) * phi * X * X + phi * phi * X - G(4) * xi;
  f.h = G(2) * X.pow(3) - phi * X * X + xi;
  f.l = G(14) * phi * X - G(22) * xi - G(4) * phi.pow(3);
  f.t = G(20) * X.pow(3) + G(5) * phi * phi * X * X - G(90) * phi * xi * X - G(135) * xi * xi - G(20) * phi.pow(3) * xi;
  f.p = f.l * f.t;
  f.q = G(4) * f.t.pow(3);
  return f;
}

namespace {

PolynomialFamily specialize(const PolynomialFamily& f, const std::vector<P>& images) {
  auto s = [&](const P& a) { return a.substitute(images); };
  return {s(f.f), s(f.g), s(f.h), s(f.l), s(f.t), s(f.p), s(f.q)};
}

}  // namespace

PolynomialFamily polynomial_family_symbolic() {
  auto v = curve_vars();
  auto g = P::generators(v);
  return specialize(polynomial_family_formal(), {g[0], g[1], cst(v, G::phi())});
}

PolynomialFamily polynomial_family(const Golden& xi) {
  auto v = make_vars({"X"});
  auto g = P::generators(v);
  return specialize(polynomial_family_formal(), {g[0], cst(v, xi), cst(v, G::phi())});
}

int weighted_degree(const MultiPoly<Golden>& formal, const std::array<int, 3>& w) {
  int d = -2;
  for (const auto& [e, c] : formal.terms()) {
    int k = 0;
    for (std::size_t i = 0; i < e.size() && i < 3; ++i) k += w[i] * e[i];
    if (d == -2) d = k;
    else if (d != k) return -1;
  }
  return d == -2 ? -1 : d;
}

MultiPoly<Golden> upsilon_substitution(const MultiPoly<Golden>& a, int k) {
  auto g = P::generators(curve_vars());
  const P u = g[0].pow(3) - G::phi() * g[0] * g[0] - g[1];
  return upsilon_substitution_with(a.with_vars(curve_vars()), k, u);
}

std::optional<MultiPoly<Golden>> solve_upsilon_preimage(const MultiPoly<Golden>& rhs, int k) {
  auto g = P::generators(curve_vars());
  const P u = g[0].pow(3) - G::phi() * g[0] * g[0] - g[1];
  return solve_preimage_with(rhs.with_vars(curve_vars()), k, u);
}

bool IdentityReport::all_hold() const {
  return std::all_of(checks.begin(), checks.end(), [](const IdentityCheck& c) { return c.holds; });
}

const IdentityCheck& IdentityReport::operator[](const std::string& name) const {
  for (const auto& c : checks)
    if (c.name == name) return c;
  throw InvalidArgument("no identity named '" + name + "'");
}

MultiPoly<Golden> comp_homogenization_difference(bool printed_r) {
  auto v = xyz_vars();
  auto gens = P::generators(v);
  const P &p = gens[0], &q = gens[1], &r = gens[2];
  const G phi = G::phi(), phi2 = phi * phi;
  const P Pp = phi2 * p * p - q * q, Qp = phi2 * q * q - r * r;
  const P Rp = printed_r ? phi2 * q * q - p * p : phi2 * r * r - p * p;
  const auto fam = specialize(polynomial_family_formal(), {Pp, Pp * Qp * Rp, Pp + Qp + Rp});
  const auto field = icosahedral_field();
  const P Y = G(2) * phi2 * p * (-field.numerator(0)) - G(2) * q * (-field.numerator(1));
  const G phi5 = phi.pow(5);
  const P lhs = Pp * (phi5 * Y * Y + G(10) * fam.f * fam.g).pow(2);
  const P rhs = G(500) * fam.h * fam.h * fam.g.pow(3);
  return lhs - rhs;
}

IdentityReport verify_identity_chain() {
  IdentityReport r;
  auto g = P::generators(curve_vars());
  chain_in_x(r, polynomial_family_symbolic(), g[0].pow(3) - G::phi() * g[0] * g[0] - g[1]);
  const auto formal = polynomial_family_formal();
  const bool weights = weighted_degree(formal.t, {2, 3, 1}) == 6 && weighted_degree(formal.l, {2, 3, 1}) == 3;
  r.checks.push_back({"weights", weights, weights ? "" : "t or l not weighted-homogeneous"});
  sphere_identities(r);
  discriminant_identities(r);
  r.checks.push_back(check("comp-30", comp_homogenization_difference(false)));
  return r;
}

IdentityReport verify_identity_chain(const Golden& xi) {
  IdentityReport r;
  auto v = curve_vars();
  auto g = P::generators(v);
  const auto fam = specialize(polynomial_family_formal(), {g[0], cst(v, xi), cst(v, G::phi())});
  chain_in_x(r, fam, g[0].pow(3) - G::phi() * g[0] * g[0] - cst(v, xi));
  return r;
}

// Numeric part.

std::string to_string(PQRChoice c) {
  switch (c) {
    case PQRChoice::P: return "P";
    case PQRChoice::Q: return "Q";
    case PQRChoice::R: return "R";
  }
  return "";
}

namespace {

struct Sample {
  double x[3];
  double dx[3];
  PQRState s;
};

std::vector<Sample> samples(const OrbitTrace& trace) {
  if (trace.states.empty()) throw InvalidArgument("empty trace");
  static const std::vector<CompiledPoly> rhs = [] {
    const auto field = icosahedral_field();
    std::vector<CompiledPoly> out;
    for (const auto& n : field.numerators()) out.emplace_back(-n);
    return out;
  }();
  std::vector<Sample> out;
  for (const auto& st : trace.states) {
    if (st.size() != 3) throw DimensionMismatch("icosahedral traces are 3-dimensional");
    Sample s{};
    std::copy(st.begin(), st.end(), s.x);
    for (int i = 0; i < 3; ++i) s.dx[i] = rhs[i](s.x);
    s.s = pqr_transform({s.x[0], s.x[1], s.x[2]});
    out.push_back(s);
  }
  return out;
}

/// (X, X') for the chosen coordinate.
std::pair<double, double> coordinate(const Sample& s, PQRChoice c) {
  const double p2 = kPhi * kPhi;
  const int i = c == PQRChoice::P ? 0 : c == PQRChoice::Q ? 1 : 2;
  const int j = (i + 1) % 3;
  const double X = p2 * s.x[i] * s.x[i] - s.x[j] * s.x[j];
  const double Y = 2 * p2 * s.x[i] * s.dx[i] - 2 * s.x[j] * s.dx[j];
  return {X, Y};
}

// Coefficient vectors in X (increasing powers) so residuals can be normalized by
// the largest monomial of the expanded sides.
using Coeffs = std::vector<double>;

Coeffs operator*(const Coeffs& a, const Coeffs& b) {
  Coeffs c(a.size() + b.size() - 1, 0.0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
  return c;
}

Coeffs operator*(double k, Coeffs a) {
  for (double& c : a) c *= k;
  return a;
}

Coeffs f_coeffs(double xi) {
  return {-7 * xi * kPhi, -(11 * xi + 2 * std::pow(kPhi, 3)), -7 * kPhi * kPhi, 7 * kPhi};
}
Coeffs g_coeffs(double xi) { return {-4 * xi, kPhi * kPhi, -2 * kPhi, 1}; }
Coeffs h_coeffs(double xi) { return {xi, 0, -kPhi, 2}; }
Coeffs l_coeffs(double xi) { return {-22 * xi - 4 * std::pow(kPhi, 3), 14 * kPhi}; }
Coeffs t_coeffs(double xi) {
  return {-135 * xi * xi - 20 * std::pow(kPhi, 3) * xi, -90 * kPhi * xi, 5 * kPhi * kPhi, 20};
}

double horner(const Coeffs& c, double x) {
  double v = 0;
  for (auto it = c.rbegin(); it != c.rend(); ++it) v = v * x + *it;
  return v;
}

/// Largest |c_k x^k| times w.
double max_term(const Coeffs& c, double x, double w = 1) {
  double m = 0, xp = 1;
  for (double ck : c) {
    m = std::max(m, std::abs(ck * xp * w));
    xp *= x;
  }
  return m;
}

/// Residual of a (y2 + S)^2 = B in X, where y2 carries the derivative and a, S, B
/// are polynomials in X, normalized by the largest expanded monomial.
double curve_defect(const Coeffs& a, double y2, const Coeffs& S, const Coeffs& B, double x) {
  const double av = horner(a, x), sv = horner(S, x), bv = horner(B, x);
  const double lhs = av * (y2 + sv) * (y2 + sv);
  const double scale = std::max({max_term(a, x, y2 * y2), max_term(a * S, x, 2 * std::abs(y2)), max_term(a * S * S, x),
                                 max_term(B, x)});
  return scale > 0 ? std::abs(lhs - bv) / scale : 0.0;
}

double upsilon_of(double X, double xi) { return (X * X * X - kPhi * X * X - xi) / X; }

std::array<double, 3> cubic_roots(double upsilon, double xi) {
  Eigen::Vector4d coeffs(-xi, -upsilon, -kPhi, 1.0);  // increasing powers
  Eigen::PolynomialSolver<double, 3> solver(coeffs);
  std::array<double, 3> roots{};
  for (int k = 0; k < 3; ++k) {
    double x = solver.roots()[k].real();
    for (int it = 0; it < 3; ++it) {
      const double fx = ((x - kPhi) * x - upsilon) * x - xi;
      const double dfx = (3 * x - 2 * kPhi) * x - upsilon;
      if (dfx != 0) x -= fx / dfx;
    }
    roots[k] = x;
  }
  std::sort(roots.begin(), roots.end());
  return roots;
}

}  // namespace

std::vector<double> level_set_start(double xi) {
  if (!admissible_xi(xi) && xi != 0.0) throw InvalidArgument("xi outside the admissible range");
  const CompiledPoly v(icosahedral_integral());
  const double s3 = 1 / std::sqrt(3.0), r = std::sqrt(kPhi * kPhi + 1);
  // From the extremal centre towards the vertex (1,0,0), where V = 0.
  const std::array<double, 3> a = xi < 0 ? std::array<double, 3>{kPhi / r, 1 / r, 0} : std::array<double, 3>{s3, s3, s3};
  const std::array<double, 3> b{1, 0, 0};
  auto point = [&](double s) {
    std::array<double, 3> x{};
    for (int i = 0; i < 3; ++i) x[i] = (1 - s) * a[i] + s * b[i];
    const double n = std::sqrt(x[0] * x[0] + x[1] * x[1] + x[2] * x[2]);
    for (double& c : x) c /= n;
    return x;
  };
  auto val = [&](double s) { return v(point(s).data()) - xi; };
  const int n = 2000;
  double lo = 0, hi = -1;
  for (int k = 1; k <= n; ++k) {
    const double s = double(k) / n;
    if ((val(s) >= 0) != (val(0) >= 0)) {
      lo = double(k - 1) / n;
      hi = s;
      break;
    }
  }
  if (hi < 0) throw InvalidArgument("no level-set crossing found on the search arc");
  for (int it = 0; it < 200; ++it) {
    const double mid = (lo + hi) / 2;
    ((val(mid) >= 0) == (val(lo) >= 0) ? lo : hi) = mid;
  }
  auto x = point(lo);
  return {x[0], x[1], x[2]};
}

double measured_xi(const OrbitTrace& trace) {
  if (trace.states.empty()) throw InvalidArgument("empty trace");
  const CompiledPoly v(icosahedral_integral());
  return v(trace.states.front().data());
}

double curve_residual_prop2(const OrbitTrace& trace, double xi, PQRChoice which) {
  const double phi5 = std::pow(kPhi, 5);
  double worst = 0;
  for (const auto& s : samples(trace)) {
    const auto [X, Y] = coordinate(s, which);
    const Coeffs fg = 10 * (f_coeffs(xi) * g_coeffs(xi)), h = h_coeffs(xi), g = g_coeffs(xi);
    worst = std::max(worst, curve_defect({0, 1}, Y * Y * phi5, fg, 500 * (h * h * g * g * g), X));
  }
  return worst;
}

TripleReductionReport triple_reduction(const OrbitTrace& trace, double xi, PQRChoice which) {
  const double phi5 = std::pow(kPhi, 5);
  TripleReductionReport rep;
  bool in_segment = false;
  for (const auto& s : samples(trace)) {
    const auto [X, Y] = coordinate(s, which);
    if (std::abs(X) < 1e-9) {
      ++rep.skipped;
      in_segment = false;
      continue;
    }
    if (!in_segment) ++rep.segments;
    in_segment = true;
    const double u = upsilon_of(X, xi);
    const double du = horner(h_coeffs(xi), X) * Y / (X * X);
    rep.upsilon.push_back(u);
    rep.upsilon_prime.push_back(du);
    const Coeffs t = t_coeffs(xi);
    rep.curve_residual = std::max(rep.curve_residual, curve_defect({1}, du * du * phi5, l_coeffs(xi) * t, 4 * (t * t * t), u));
    auto roots = cubic_roots(u, xi);
    std::array<double, 3> pqr{s.s.P, s.s.Q, s.s.R};
    std::sort(pqr.begin(), pqr.end());
    for (int k = 0; k < 3; ++k) rep.root_recovery = std::max(rep.root_recovery, std::abs(roots[k] - pqr[k]));
    if (std::abs(s.s.P) > 1e-9 && std::abs(s.s.Q) > 1e-9 && std::abs(s.s.R) > 1e-9) {
      const double a = upsilon_of(s.s.P, xi), b = upsilon_of(s.s.Q, xi), c = upsilon_of(s.s.R, xi);
      rep.upsilon_agreement = std::max(rep.upsilon_agreement, std::max({a, b, c}) - std::min({a, b, c}));
    }
  }
  return rep;
}

RationalCurveReport rational_curve_residual(const OrbitTrace& trace, PQRChoice which) {
  const double xi = -std::pow(kPhi, 3) / 6;
  const double ip2 = 1 / (kPhi * kPhi);
  RationalCurveReport rep;
  for (const auto& s : samples(trace)) {
    const auto [X, Y] = coordinate(s, which);
    if (std::abs(X) < 1e-9) continue;
    const double d = ip2 * upsilon_of(X, xi);
    const double dd = ip2 * horner(h_coeffs(xi), X) * Y / (X * X);
    const Coeffs c3{-1, 36, 12, 48};
    const Coeffs lin = 5 * (Coeffs{-1, 42} * c3);
    const Coeffs rhs = 375 * (c3 * c3 * c3);
    const double printed = curve_defect({4}, 36 * dd * dd, lin, rhs, d);
    const double corrected = curve_defect({1}, 36 * dd * dd, lin, rhs, d);
    rep.printed_residual = std::max(rep.printed_residual, printed);
    rep.corrected_residual = std::max(rep.corrected_residual, corrected);
  }
  return rep;
}

RecuBasReport verify_recu_bas(const OrbitTrace& trace, double xi) {
  RecuBasReport rep;
  const double p2 = kPhi * kPhi;
  for (const auto& s : samples(trace)) {
    const double P = s.s.P, Q = s.s.Q, R = s.s.R;
    const double prod2 = s.x[0] * s.x[0] * s.x[1] * s.x[1] * s.x[2] * s.x[2];
    rep.rys = std::max({rep.rys, std::abs(P + Q + R - kPhi), std::abs(P * Q * R - xi)});
    const double alpha = P * P * Q + Q * Q * R + R * R * P, beta = P * Q * Q + Q * R * R + R * P * P;
    const double bas_rhs = 22 * P * Q * R + P * P * P + Q * Q * Q + R * R * R + 6.5 * (alpha + beta) +
                           std::sqrt(5.0) / 2 * (alpha - beta);
    const double bas_lhs = 64 * p2 * kPhi * prod2;
    const double bas_scale = std::max({1e-300, std::abs(bas_lhs), std::abs(22 * P * Q * R) + std::abs(P * P * P) +
                                                                        std::abs(Q * Q * Q) + std::abs(R * R * R)});
    rep.bas = std::max(rep.bas, std::abs(bas_lhs - bas_rhs) / bas_scale);
    if (std::abs(P) < 1e-9) {
      ++rep.skipped;
      continue;
    }
    const double disc_rhs = std::pow(2 * P * P - kPhi * P + xi / P, 2) * (P * P - 2 * kPhi * P + p2 - 4 * xi / P);
    const double disc_lhs = std::pow(alpha - beta, 2);
    rep.discriminant = std::max(rep.discriminant, std::abs(disc_lhs - disc_rhs) / std::max({1.0, std::abs(disc_rhs)}));
    const double dt[4] = {std::pow(P, 4), -2 * kPhi * std::pow(P, 3), p2 * P * P, -4 * xi * P};
    const double den = dt[0] + dt[1] + dt[2] + dt[3];
    if (std::abs(den) < 1e-14) {
      ++rep.skipped;
      continue;
    }
    // Cross-multiplied so the check stays finite near small denominators.
    const double Y = coordinate(s, PQRChoice::P).second;
    const double k = 1280 / p2 * prod2;
    const double scale = std::max(Y * Y, k * (std::abs(dt[0]) + std::abs(dt[1]) + std::abs(dt[2]) + std::abs(dt[3])));
    if (scale > 0) rep.recu = std::max(rep.recu, std::abs(Y * Y - k * den) / scale);
  }
  return rep;
}

}  // namespace superflow
