#include "superflow/projection_lab.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>

#include <Eigen/Dense>

#include "superflow/compiled.hpp"
#include "superflow/detail/drive.hpp"
#include "superflow/errors.hpp"
#include "superflow/flow_engine.hpp"

namespace superflow {
namespace {

const double kPhi = (1 + std::sqrt(5.0)) / 2;
const double kPi = 3.14159265358979323846;

using State = std::vector<double>;

double dist(const Point2& a, const Point2& b) { return std::hypot(a[0] - b[0], a[1] - b[1]); }

double point_segment(const Point2& p, const Point2& a, const Point2& b) {
  const double dx = b[0] - a[0], dy = b[1] - a[1], l2 = dx * dx + dy * dy;
  double s = l2 > 0 ? ((p[0] - a[0]) * dx + (p[1] - a[1]) * dy) / l2 : 0.0;
  s = std::clamp(s, 0.0, 1.0);
  return std::hypot(p[0] - a[0] - s * dx, p[1] - a[1] - s * dy);
}

/// Cubic Hermite refinement of a sampled path with known derivatives.
std::vector<Point2> densify(const std::vector<double>& u, const std::vector<Point2>& x, const std::vector<Point2>& dx,
                            int sub) {
  std::vector<Point2> out;
  for (std::size_t i = 0; i + 1 < x.size(); ++i) {
    const double h = u[i + 1] - u[i];
    for (int k = 0; k < sub; ++k) {
      const double s = double(k) / sub, s2 = s * s, s3 = s2 * s;
      const double h00 = 2 * s3 - 3 * s2 + 1, h10 = s3 - 2 * s2 + s, h01 = -2 * s3 + 3 * s2, h11 = s3 - s2;
      Point2 p{};
      for (int c = 0; c < 2; ++c) p[c] = h00 * x[i][c] + h10 * h * dx[i][c] + h01 * x[i + 1][c] + h11 * h * dx[i + 1][c];
      out.push_back(p);
    }
  }
  out.push_back(x.back());
  return out;
}

double polyline_distance(const Point2& p, const std::vector<Point2>& line) {
  if (line.size() == 1) return dist(p, line[0]);
  double best = INFINITY;
  for (std::size_t i = 0; i + 1 < line.size(); ++i) best = std::min(best, point_segment(p, line[i], line[i + 1]));
  return best;
}

double hausdorff(const std::vector<Point2>& a, const std::vector<Point2>& b) {
  double h = 0;
  for (const auto& p : a) h = std::max(h, polyline_distance(p, b));
  for (const auto& p : b) h = std::max(h, polyline_distance(p, a));
  return h;
}

IntegrationOptions planar_options(double tol, double max_step = 1e-2) {
  IntegrationOptions o;
  o.atol = o.rtol = tol;
  o.max_step = max_step;
  return o;
}

struct Surface {
  std::function<Point2(const Point3&)> map;
  std::function<Point3(const Point2&)> inverse;
};

Surface surface_of(ProjectionKind k) {
  switch (k) {
    case ProjectionKind::stereographic_scaled:
    case ProjectionKind::stereographic_true: return {stereo_map, stereo_inverse};
    case ProjectionKind::orthogonal_x0: return {orthogonal_x0_map, orthogonal_x0_inverse};
    case ProjectionKind::orthogonal_diag: return {orthogonal_diag_map, orthogonal_diag_inverse};
  }
  throw InvalidArgument("unknown projection kind");
}

void check_on_surface(ProjectionKind k, const Point3& x) {
  const double w = x[0] * x[0] + x[1] * x[1] + x[2] * x[2];
  switch (k) {
    case ProjectionKind::stereographic_scaled:
    case ProjectionKind::stereographic_true:
      if (std::abs(w - 1) > 1e-12) throw InvalidArgument("stereographic contract needs a unit vector");
      break;
    case ProjectionKind::orthogonal_x0:
      if (x[0] <= 0) throw InvalidArgument("orthogonal x=0 projection needs x > 0");
      [[fallthrough]];
    case ProjectionKind::orthogonal_diag:
      if (std::abs(x[0] * x[0] - x[1] * x[1] - 1) > 1e-12) throw InvalidArgument("point is not on x^2 - y^2 = 1");
      break;
  }
}

}  // namespace

Point2 stereo_map(const Point3& x) {
  const double d = 1 - x[2];
  if (std::abs(d) < 1e-15) throw InvalidArgument("stereographic projection pole z = 1");
  return {2 * x[0] / d, 2 * x[1] / d};
}

Point3 stereo_inverse(const Point2& ab) {
  const double s = ab[0] * ab[0] + ab[1] * ab[1];
  return {4 * ab[0] / (s + 4), 4 * ab[1] / (s + 4), (s - 4) / (s + 4)};
}

Point2 orthogonal_x0_map(const Point3& x) { return {x[1], x[2]}; }

Point3 orthogonal_x0_inverse(const Point2& ab) { return {std::sqrt(1 + ab[0] * ab[0]), ab[0], ab[1]}; }

Point2 orthogonal_diag_map(const Point3& x) { return {(x[0] + x[1]) / 2, x[2]}; }

Point3 orthogonal_diag_inverse(const Point2& ab) {
  if (ab[0] == 0) throw InvalidArgument("alpha = 0 is outside the diagonal chart");
  return {ab[0] + 1 / (4 * ab[0]), ab[0] - 1 / (4 * ab[0]), ab[1]};
}

std::string to_string(ProjectionKind k) {
  switch (k) {
    case ProjectionKind::stereographic_scaled: return "scaled";
    case ProjectionKind::stereographic_true: return "true";
    case ProjectionKind::orthogonal_x0: return "orthogonal-x0";
    case ProjectionKind::orthogonal_diag: return "orthogonal-diag";
  }
  return "";
}

ProjectionKind parse_projection_kind(const std::string& s) {
  for (auto k : {ProjectionKind::stereographic_scaled, ProjectionKind::stereographic_true, ProjectionKind::orthogonal_x0,
                 ProjectionKind::orthogonal_diag})
    if (s == to_string(k)) return k;
  if (s == "stereographic-scaled") return ProjectionKind::stereographic_scaled;
  if (s == "stereographic-true") return ProjectionKind::stereographic_true;
  throw InvalidArgument("unknown projection kind '" + s + "'");
}

Point2 ProjectedField::to_plane(const Point3& x) const { return surface_of(kind).map(x); }

Point3 ProjectedField::to_space(const Point2& ab) const { return surface_of(kind).inverse(ab); }

ProjectedField project_field(const Superflow& s, ProjectionKind kind) {
  const bool stereo = kind == ProjectionKind::stereographic_scaled || kind == ProjectionKind::stereographic_true;
  if (stereo && !s.spherical)
    throw InvalidArgument("stereographic projection needs a spherical superflow, not " + to_string(s.name));
  if (!stereo && s.name != SuperflowName::T_hat)
    throw InvalidArgument("orthogonal projections are defined for the tetrahedral superflow only");
  auto field = std::make_shared<CompiledField>(s.field);
  ProjectedField p{kind, s.name, {}};
  auto at = [field](const Point3& x) {
    Point3 v{};
    field->eval(x.data(), v.data());
    return v;
  };
  switch (kind) {
    case ProjectionKind::stereographic_scaled:
      p.eval = [at](const Point2& ab) {
        const auto v = at(stereo_inverse(ab));
        return Point2{2 * v[0] + ab[0] * v[2], 2 * v[1] + ab[1] * v[2]};
      };
      break;
    case ProjectionKind::stereographic_true:
      p.eval = [at](const Point2& ab) {
        const auto v = at(stereo_inverse(ab));
        const double k = (ab[0] * ab[0] + ab[1] * ab[1] + 4) / 8;
        return Point2{k * (2 * v[0] + ab[0] * v[2]), k * (2 * v[1] + ab[1] * v[2])};
      };
      break;
    case ProjectionKind::orthogonal_x0:
      p.eval = [at](const Point2& ab) {
        const auto v = at(orthogonal_x0_inverse(ab));
        return Point2{v[1], v[2]};
      };
      break;
    case ProjectionKind::orthogonal_diag:
      p.eval = [at](const Point2& ab) {
        const auto v = at(orthogonal_diag_inverse(ab));
        return Point2{(v[0] + v[1]) / 2, v[2]};
      };
      break;
  }
  return p;
}

ContractReport verify_projection_contract(const Superflow& s, ProjectionKind kind, const Point3& x, double t,
                                          double tol) {
  if (std::abs(t) > 0.1) throw InvalidArgument("contract check is for |t| <= 0.1");
  check_on_surface(kind, x);
  const auto pf = project_field(s, kind);
  const auto sf = surface_of(kind);
  const Point2 a0 = sf.map(x);
  auto planar_rhs = [&](const State& y, State& dy) {
    const auto v = pf({y[0], y[1]});
    dy[0] = v[0];
    dy[1] = v[1];
  };

  ContractReport rep;
  IntegrationOptions opts3;
  opts3.atol = opts3.rtol = tol;
  opts3.max_step = 1e-3;
  const auto trace = integrate_field(s.field, {x[0], x[1], x[2]}, t, tol, opts3);
  const auto& xe = trace.final_state();
  rep.projected = sf.map({xe[0], xe[1], xe[2]});

  if (kind != ProjectionKind::stereographic_scaled) {
    State y{a0[0], a0[1]};
    detail::drive(planar_rhs, y, 0.0, t, planar_options(tol, 1e-3), [&](double, const State& z) { y = z; });
    rep.planar = {y[0], y[1]};
    rep.residual = dist(rep.planar, rep.projected);
    return rep;
  }

  // The scaled field is (1 - z) times the true one, so its parameter u runs
  // with dt/du = 1 - z = 8/(a^2 + b^2 + 4). Solve for the u reaching time t.
  rep.orbit_distance = true;
  auto aug_rhs = [&](const State& y, State& dy) {
    const auto v = pf({y[0], y[1]});
    dy[0] = v[0];
    dy[1] = v[1];
    dy[2] = 8 / (y[0] * y[0] + y[1] * y[1] + 4);
  };
  std::vector<double> us;
  std::vector<Point2> pts, tangents;
  auto run = [&](double u_end) {
    us.clear();
    pts.clear();
    tangents.clear();
    State last{a0[0], a0[1], 0.0};
    detail::drive(aug_rhs, State{a0[0], a0[1], 0.0}, 0.0, u_end, planar_options(tol, 1e-3), [&](double u, const State& z) {
      us.push_back(u);
      pts.push_back({z[0], z[1]});
      tangents.push_back(pf({z[0], z[1]}));
      last = z;
    });
    return last;
  };
  double u_end = t * (a0[0] * a0[0] + a0[1] * a0[1] + 4) / 8;
  for (int it = 0; it < 8; ++it) {
    const State end = run(u_end);
    const double rate = 8 / (end[0] * end[0] + end[1] * end[1] + 4);
    const double du = (t - end[2]) / rate;
    u_end += du;
    if (std::abs(du) < 1e-14) break;
  }
  run(u_end);
  rep.planar = pts.back();

  std::vector<double> ts;
  std::vector<Point2> images, image_tangents;
  const auto true_field = project_field(s, ProjectionKind::stereographic_true);
  for (std::size_t i = 0; i < trace.states.size(); ++i) {
    const auto& st = trace.states[i];
    const Point2 img = stereo_map({st[0], st[1], st[2]});
    ts.push_back(trace.times[i]);
    images.push_back(img);
    image_tangents.push_back(true_field(img));
  }
  const auto a = densify(ts, images, image_tangents, 16);
  const auto b = densify(us, pts, tangents, 16);
  rep.residual = std::max(hausdorff(a, b), dist(rep.planar, rep.projected));
  return rep;
}

CircleImage great_circle_image(const Point3& normal, int samples) {
  if (samples < 8) throw InvalidArgument("need at least 8 samples");
  Eigen::Vector3d n(normal[0], normal[1], normal[2]);
  if (n.norm() == 0) throw InvalidArgument("zero plane normal");
  n.normalize();
  Eigen::Vector3d u = n.unitOrthogonal(), v = n.cross(u);
  std::vector<Point2> pts;
  for (int k = 0; k < samples; ++k) {
    const double th = 2 * kPi * (k + 0.25) / samples;
    const Eigen::Vector3d x = std::cos(th) * u + std::sin(th) * v;
    if (1 - x.z() < 1e-6) continue;
    pts.push_back(stereo_map({x.x(), x.y(), x.z()}));
  }
  CircleImage c;
  const double a = n.x(), b = n.y(), cz = n.z();
  if (std::abs(cz) < 1e-14) {
    // Planes through the pole give lines a alpha + b beta = 0.
    c.is_line = true;
    const double l = std::hypot(a, b);
    c.exact_center = {-b / l, a / l};
    Eigen::MatrixXd m(pts.size(), 2);
    for (std::size_t i = 0; i < pts.size(); ++i) m.row(i) << pts[i][0], pts[i][1];
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(m, Eigen::ComputeThinV);
    const Eigen::Vector2d nn = svd.matrixV().col(1);
    c.center = {-nn.y(), nn.x()};
    if (c.center[0] * c.exact_center[0] + c.center[1] * c.exact_center[1] < 0) c.center = {nn.y(), -nn.x()};
    for (const auto& p : pts) c.fit_residual = std::max(c.fit_residual, std::abs(nn.x() * p[0] + nn.y() * p[1]));
    return c;
  }
  c.exact_center = {-2 * a / cz, -2 * b / cz};
  c.exact_radius = 2 * std::sqrt((a * a + b * b) / (cz * cz) + 1);
  // Algebraic least squares: a^2 + b^2 + D a + E b + F = 0.
  Eigen::MatrixXd m(pts.size(), 3);
  Eigen::VectorXd rhs(pts.size());
  for (std::size_t i = 0; i < pts.size(); ++i) {
    m.row(i) << pts[i][0], pts[i][1], 1.0;
    rhs(i) = -(pts[i][0] * pts[i][0] + pts[i][1] * pts[i][1]);
  }
  const Eigen::Vector3d sol = m.colPivHouseholderQr().solve(rhs);
  c.center = {-sol(0) / 2, -sol(1) / 2};
  c.radius = std::sqrt(sol(0) * sol(0) / 4 + sol(1) * sol(1) / 4 - sol(2));
  for (const auto& p : pts) c.fit_residual = std::max(c.fit_residual, std::abs(dist(p, c.center) - c.radius));
  return c;
}

std::vector<CircleImage> singular_circle_images(int samples) {
  const double r = std::sqrt(kPhi * kPhi + 1);
  struct Plane {
    std::string label;
    Point3 normal;
    Point2 stated_center;
    double stated_radius;
  };
  // For lines the stated "center" holds the stated direction.
  const double ln = std::hypot(kPhi, 1);
  const std::vector<Plane> planes = {
      {"I: y = phi x", {kPhi, -1, 0}, {kPhi / ln, 1 / ln}, 0},
      {"I: y = -phi x", {kPhi, 1, 0}, {-kPhi / ln, 1 / ln}, 0},
      {"I: z = phi y", {0, -kPhi, 1}, {0, 2 * kPhi}, 2 * r},
      {"I: z = -phi y", {0, kPhi, 1}, {0, -2 * kPhi}, 2 * r},
      {"I: x = phi z", {1, 0, -kPhi}, {2 / kPhi, 0}, r / kPhi},
      {"I: x = -phi z", {1, 0, kPhi}, {-2 / kPhi, 0}, r / kPhi},
      {"O: x + y + z = 0", {1, 1, 1}, {-2, -2}, std::sqrt(12.0)},
      {"O: x + y - z = 0", {1, 1, -1}, {2, 2}, std::sqrt(12.0)},
      {"O: x - y + z = 0", {1, -1, 1}, {-2, 2}, std::sqrt(12.0)},
      {"O: x - y - z = 0", {1, -1, -1}, {2, -2}, std::sqrt(12.0)},
  };
  std::vector<CircleImage> out;
  for (const auto& p : planes) {
    auto c = great_circle_image(p.normal, samples);
    c.label = p.label;
    c.stated_center = p.stated_center;
    c.stated_radius = p.stated_radius;
    out.push_back(c);
  }
  return out;
}

double orbit_equation_check(double a, double b) {
  if (a == 0) throw InvalidArgument("alpha = 0 is outside the diagonal chart");
  const double x = a + 1 / (4 * a);
  const double wa = 2 * x * (1 - 1 / (4 * a * a)), wb = -2 * b;
  return wa * (a * b) + wb * (a * a - 1 / (16 * a * a));
}

MultiPoly<Golden> orbit_equation_numerator() {
  using P = MultiPoly<Golden>;
  auto g = P::generators(make_vars({"alpha", "beta"}));
  const P &a = g[0], &b = g[1];
  const P one = P::constant(a.vars(), Golden(1));
  // W = N / D with N = (4a^2 + 1)^2 - 16 a^2 b^2, D = 16 a^2; Theta = (16a^4 - 1) / D.
  const P N = (Golden(4) * a * a + one).pow(2) - Golden(16) * a * a * b * b;
  const P D = Golden(16) * a * a;
  return (N.derivative(0) * D - N * D.derivative(0)) * a * b + N.derivative(1) * (Golden(16) * a.pow(4) - one);
}

RationalVF<Golden> embed_flow_as_projective(const RationalVF<Golden>& planar) {
  using P = MultiPoly<Golden>;
  const int n = planar.dim();
  if (n == 0 || planar.vars()->size() != static_cast<std::size_t>(n))
    throw DimensionMismatch("planar field must have one component per variable");
  std::vector<std::string> names(*planar.vars());
  names.push_back(std::find(names.begin(), names.end(), "z") == names.end() ? "z" : "z_h");
  auto vars = make_vars(names);
  auto homogenize = [&](const P& p, int d) {
    P::TermMap out;
    for (const auto& [e, c] : p.terms()) {
      auto f = e;
      int deg = 0;
      for (int k : e) deg += k;
      f.push_back(d - deg);
      out.emplace(f, c);
    }
    return P(vars, std::move(out));
  };
  auto zpow = [&](int k) {
    std::vector<int> e(n + 1, 0);
    e[n] = k;
    return P::monomial(vars, e, Golden(1));
  };
  const int b = planar.denominator().degree();
  int extra = 0;
  for (const auto& num : planar.numerators()) extra = std::max(extra, num.degree() - 2 - b);
  std::vector<P> nums;
  for (const auto& num : planar.numerators()) {
    if (num.is_zero()) {
      nums.push_back(P(vars));
      continue;
    }
    const int a = num.degree();
    nums.push_back(homogenize(num, a) * zpow(2 + b - a + extra));
  }
  nums.push_back(P(vars));
  const P den = homogenize(planar.denominator(), b) * zpow(extra);
  RationalVF<Golden> out(nums, den, false);
  if (!out.is_two_homogeneous()) throw VerificationFailure("embedded field is not 2-homogeneous");
  return out;
}

// Figures.

std::string to_string(FigureKind k) {
  switch (k) {
    case FigureKind::fig2: return "fig2";
    case FigureKind::fig3: return "fig3";
    case FigureKind::fig4: return "fig4";
    case FigureKind::quadratic_deformation: return "quadratic-deformation";
  }
  return "";
}

FigureKind parse_figure_kind(const std::string& s) {
  for (auto k : {FigureKind::fig2, FigureKind::fig3, FigureKind::fig4, FigureKind::quadratic_deformation})
    if (s == to_string(k)) return k;
  throw InvalidArgument("unknown figure '" + s + "'");
}

double polygon_area(const std::vector<Point2>& pts) {
  double a = 0;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    const auto& p = pts[i];
    const auto& q = pts[(i + 1) % pts.size()];
    a += p[0] * q[1] - q[0] * p[1];
  }
  return std::abs(a) / 2;
}

namespace {

int count_occurrences(const std::string& svg, const std::string& needle) {
  int n = 0;
  for (auto pos = svg.find(needle); pos != std::string::npos; pos = svg.find(needle, pos + needle.size())) ++n;
  return n;
}

}  // namespace

int count_svg_class(const std::string& svg, const std::string& cls) {
  return count_occurrences(svg, "class=\"" + cls + "\"");
}

int count_svg_elements(const std::string& svg, const std::string& tag, const std::string& cls) {
  return count_occurrences(svg, "<" + tag + " class=\"" + cls + "\"");
}

namespace {

struct Canvas {
  double w;
  std::ostringstream out;

  explicit Canvas(double window) : w(window) {
    out.precision(6);
    out << std::fixed;
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 1000 1000\" width=\"1000\" height=\"1000\">\n"
        << "<defs><clipPath id=\"frame\"><rect x=\"0\" y=\"0\" width=\"1000\" height=\"1000\"/></clipPath></defs>\n"
        << "<rect x=\"0\" y=\"0\" width=\"1000\" height=\"1000\" fill=\"white\" stroke=\"black\"/>\n"
        << "<g clip-path=\"url(#frame)\" fill=\"none\">\n";
  }
  double sx(double a) const { return 500 + a * 500 / w; }
  double sy(double b) const { return 500 - b * 500 / w; }
  double scale(double r) const { return r * 500 / w; }

  void glyph(const Point2& p, const Point2& v, double len) {
    const double n = std::hypot(v[0], v[1]);
    if (!(n > 1e-12)) return;
    const double dx = v[0] / n * len / 2, dy = v[1] / n * len / 2;
    const double x0 = sx(p[0] - dx), y0 = sy(p[1] - dy), x1 = sx(p[0] + dx), y1 = sy(p[1] + dy);
    // Arrow head: two short strokes at the tip.
    const double hx = (x1 - x0) * 0.3, hy = (y1 - y0) * 0.3;
    out << "<path class=\"glyph\" stroke=\"#555\" stroke-width=\"1\" d=\"M" << x0 << ' ' << y0 << " L" << x1 << ' ' << y1
        << " M" << x1 << ' ' << y1 << " L" << x1 - hx + hy * 0.6 << ' ' << y1 - hy - hx * 0.6 << " M" << x1 << ' ' << y1
        << " L" << x1 - hx - hy * 0.6 << ' ' << y1 - hy + hx * 0.6 << "\"/>\n";
  }
  void circle(const Point2& c, double r) {
    out << "<circle class=\"boundary\" stroke=\"#c00\" stroke-width=\"2\" cx=\"" << sx(c[0]) << "\" cy=\"" << sy(c[1])
        << "\" r=\"" << scale(r) << "\"/>\n";
  }
  void line(const Point2& dir) {
    const double L = 2 * w;
    out << "<line class=\"boundary\" stroke=\"#c00\" stroke-width=\"2\" x1=\"" << sx(-L * dir[0]) << "\" y1=\""
        << sy(-L * dir[1]) << "\" x2=\"" << sx(L * dir[0]) << "\" y2=\"" << sy(L * dir[1]) << "\"/>\n";
  }
  void path(const std::string& cls, const std::vector<Point2>& pts, bool closed) {
    out << "<path class=\"" << cls << "\" stroke=\"#036\" stroke-width=\"1.5\" d=\"";
    for (std::size_t i = 0; i < pts.size(); ++i) out << (i ? " L" : "M") << sx(pts[i][0]) << ' ' << sy(pts[i][1]);
    out << (closed ? " Z" : "") << "\"/>\n";
  }
  std::string finish() {
    out << "</g>\n</svg>\n";
    return out.str();
  }
};

std::string field_csv(const ProjectedField& f, double w, int grid, Canvas& canvas) {
  std::ostringstream csv;
  csv.precision(17);
  csv << "alpha,beta,Pi,Theta\n";
  const double cell = 2 * w / grid;
  for (int i = 0; i < grid; ++i)
    for (int j = 0; j < grid; ++j) {
      const Point2 p{-w + (i + 0.5) * cell, -w + (j + 0.5) * cell};
      Point2 v{};
      try {
        v = f(p);
      } catch (const InvalidArgument&) {
        continue;  // outside the chart, e.g. alpha = 0 for the diagonal projection
      }
      csv << p[0] << ',' << p[1] << ',' << v[0] << ',' << v[1] << '\n';
      canvas.glyph(p, v, 0.7 * cell);
    }
  return csv.str();
}

void draw_boundaries(Canvas& canvas, SuperflowName name, ProjectionKind kind) {
  if (kind != ProjectionKind::stereographic_scaled && kind != ProjectionKind::stereographic_true) return;
  if (name != SuperflowName::I && name != SuperflowName::O) return;
  const bool oct = name == SuperflowName::O;
  for (const auto& c : singular_circle_images()) {
    if ((c.label[0] == 'O') != oct) continue;
    if (c.is_line) canvas.line(c.center);
    else canvas.circle(c.center, c.radius);
  }
}

}  // namespace

FigureData build_projection_figure(SuperflowName name, ProjectionKind kind, double window, int grid) {
  if (!(window > 0)) throw InvalidArgument("window must be positive");
  if (grid < 2 || grid > 400) throw InvalidArgument("grid must be in [2, 400]");
  FigureData d;
  d.window = window;
  const auto sf = build_superflow(name);
  const auto pf = project_field(sf, kind);
  Canvas canvas(window);
  d.csv = field_csv(pf, window, grid, canvas);
  draw_boundaries(canvas, name, kind);
  d.svg = canvas.finish();
  d.boundary_curves = count_svg_class(d.svg, "boundary");
  return d;
}

namespace {

FigureData stereographic_figure(FigureKind kind, int grid) {
  const bool oct = kind == FigureKind::fig4;
  auto d = build_projection_figure(oct ? SuperflowName::O : SuperflowName::I, ProjectionKind::stereographic_scaled,
                                   kind == FigureKind::fig2 ? 7 : 3, grid);
  d.kind = kind;
  return d;
}

FigureData deformation_figure(int grid) {
  FigureData d;
  d.kind = FigureKind::quadratic_deformation;
  d.window = 2;
  const auto sf = build_superflow(SuperflowName::A4);
  const CompiledField field(sf.field);
  // Restricted to the invariant plane z = 1.
  auto planar = [&](const Point2& p) {
    const double x[3] = {p[0], p[1], 1.0};
    double v[3];
    field.eval(x, v);
    return Point2{v[0], v[1]};
  };
  const int n = std::max(720, 24 * grid);
  std::vector<Point2> curve(n);
  for (int k = 0; k < n; ++k) curve[k] = {std::cos(2 * kPi * k / n), std::sin(2 * kPi * k / n)};
  const IntegrationOptions opts = planar_options(1e-11);
  auto rhs = [&](const State& y, State& dy) {
    const auto v = planar({y[0], y[1]});
    dy[0] = v[0];
    dy[1] = v[1];
  };
  d.closed_curves.push_back(curve);
  for (int j = 1; j <= 6; ++j) {
    for (auto& p : curve) {
      State y{p[0], p[1]};
      detail::drive(rhs, y, 0.0, 0.06, opts, [&](double, const State& z) { y = z; });
      p = {y[0], y[1]};
    }
    d.closed_curves.push_back(curve);
  }
  for (const auto& c : d.closed_curves) d.areas.push_back(polygon_area(c));

  // The orbit x^3 y - x y^3 = 0.05 through the ray at angle pi/8, where the
  // integral equals r^4 / 4.
  const double r0 = std::pow(0.2, 0.25);
  const Point2 start{r0 * std::cos(kPi / 8), r0 * std::sin(kPi / 8)};
  struct Escape {};
  auto trace = [&](double t_end) {
    std::vector<Point2> pts;
    try {
      detail::drive(rhs, State{start[0], start[1]}, 0.0, t_end, planar_options(1e-11, 1e-3), [&](double, const State& z) {
        pts.push_back({z[0], z[1]});
        if (std::hypot(z[0], z[1]) > 1.5 * d.window) throw Escape{};
      });
    } catch (const Escape&) {
    } catch (const IntegrationError&) {
    }
    return pts;
  };
  auto back = trace(-5.0), fwd = trace(5.0);
  std::reverse(back.begin(), back.end());
  d.open_orbit = back;
  d.open_orbit.insert(d.open_orbit.end(), fwd.begin() + 1, fwd.end());

  Canvas canvas(d.window);
  std::ostringstream csv;
  csv.precision(17);
  csv << "curve,time,x,y\n";
  for (std::size_t j = 0; j < d.closed_curves.size(); ++j) {
    canvas.path("closed-curve", d.closed_curves[j], true);
    for (const auto& p : d.closed_curves[j]) csv << j << ',' << 0.06 * j << ',' << p[0] << ',' << p[1] << '\n';
  }
  canvas.path("orbit", d.open_orbit, false);
  for (const auto& p : d.open_orbit) csv << "orbit,," << p[0] << ',' << p[1] << '\n';
  d.csv = csv.str();
  d.svg = canvas.finish();
  d.boundary_curves = count_svg_class(d.svg, "boundary");
  return d;
}

}  // namespace

FigureData build_figure(FigureKind kind, int grid) {
  if (grid < 2 || grid > 400) throw InvalidArgument("grid must be in [2, 400]");
  if (kind == FigureKind::quadratic_deformation) return deformation_figure(grid);
  return stereographic_figure(kind, grid);
}

FigureData emit_figure_data(FigureKind kind, int grid, const std::string& prefix) {
  auto d = build_figure(kind, grid);
  for (const auto& [ext, body] : {std::pair{".csv", &d.csv}, std::pair{".svg", &d.svg}}) {
    std::ofstream f(prefix + ext);
    if (!f) throw IoError("cannot write " + prefix + ext);
    f << *body;
    if (!f) throw IoError("write failed for " + prefix + ext);
  }
  return d;
}

}  // namespace superflow
