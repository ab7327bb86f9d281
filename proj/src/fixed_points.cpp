#include "superflow/fixed_points.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <unordered_map>

#include "superflow/compiled.hpp"
#include "superflow/errors.hpp"

namespace superflow {
namespace {

using G = Golden;

/// All sign choices on the nonzero entries of (a, b, c) and its cyclic shifts.
std::vector<ExactVector<G>> signed_cyclic_orbit(const G& a, const G& b, const G& c) {
  std::vector<ExactVector<G>> out;
  const G base[3] = {a, b, c};
  for (int shift = 0; shift < 3; ++shift)
    for (int signs = 0; signs < 8; ++signs) {
      ExactVector<G> v(3);
      bool skip = false;
      for (int i = 0; i < 3; ++i) {
        G entry = base[(i + 3 - shift) % 3];
        if ((signs >> i) & 1) {
          if (entry.is_zero()) skip = true;
          entry = -entry;
        }
        v(i) = entry;
      }
      if (!skip) out.push_back(v);
    }
  return out;
}

std::array<double, 3> to_unit(const ExactVector<G>& v) {
  std::array<double, 3> p{v(0).to_double(), v(1).to_double(), v(2).to_double()};
  const double r = std::sqrt(p[0] * p[0] + p[1] * p[1] + p[2] * p[2]);
  for (double& c : p) c /= r;
  return p;
}

using Vec3 = std::array<double, 3>;

double dot(const Vec3& a, const Vec3& b) { return a[0] * b[0] + a[1] * b[1] + a[2] * b[2]; }

Vec3 normalized(Vec3 a) {
  const double r = std::sqrt(dot(a, a));
  for (double& c : a) c /= r;
  return a;
}

Vec3 cross(const Vec3& a, const Vec3& b) {
  return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

}  // namespace

std::string to_string(FixedPointClass c) {
  switch (c) {
    case FixedPointClass::pentagon_center: return "pentagon-center";
    case FixedPointClass::triangle_center: return "triangle-center";
    case FixedPointClass::edge_vertex: return "edge/vertex";
  }
  return "";
}

std::array<double, 3> FixedPoint::unit_direction() const { return to_unit(location); }

std::vector<FixedPoint> enumerate_fixed_points(const Superflow& s) {
  if (s.name != SuperflowName::I) throw InvalidArgument("fixed-point list is defined for the icosahedral superflow");
  const G phi = G::phi();
  const G iphi = phi.inverse();
  std::vector<FixedPoint> out;
  auto add = [&](const std::vector<ExactVector<G>>& pts, FixedPointClass c, int index) {
    for (const auto& p : pts) out.push_back({p, c, index});
  };
  add(signed_cyclic_orbit(phi, 1, 0), FixedPointClass::pentagon_center, 1);
  add(signed_cyclic_orbit(1, 1, 1), FixedPointClass::triangle_center, 1);
  // (1,1,1) is its own cyclic shift; keep one copy of each of the 8 sign patterns.
  {
    std::vector<FixedPoint> uniq;
    for (const auto& f : out) {
      bool dup = false;
      for (const auto& u : uniq) dup = dup || matrices_equal<G>(u.location, f.location);
      if (!dup) uniq.push_back(f);
    }
    out = std::move(uniq);
  }
  add(signed_cyclic_orbit(iphi, phi, 0), FixedPointClass::triangle_center, 1);
  add(signed_cyclic_orbit(phi, iphi, 1), FixedPointClass::edge_vertex, -1);
  add(signed_cyclic_orbit(1, 0, 0), FixedPointClass::edge_vertex, -1);
  for (const auto& f : out) {
    std::vector<G> x{f.location(0), f.location(1), f.location(2)};
    for (const auto& c : s.field.evaluate(x))
      if (!c.is_zero()) throw VerificationFailure("listed fixed point is not a zero of the field");
  }
  return out;
}

double linearization_determinant(const Superflow& s, const std::array<double, 3>& unit_point, double step) {
  const CompiledField f(s.field);
  const Vec3 p = normalized(unit_point);
  Vec3 seed = std::abs(p[0]) < 0.9 ? Vec3{1, 0, 0} : Vec3{0, 1, 0};
  const Vec3 e1 = normalized(cross(p, seed));
  const Vec3 e2 = cross(p, e1);
  auto tangent = [&](double u, double v) {
    Vec3 q{p[0] + u * e1[0] + v * e2[0], p[1] + u * e1[1] + v * e2[1], p[2] + u * e1[2] + v * e2[2]};
    q = normalized(q);
    Vec3 val;
    f.eval(q.data(), val.data());
    return std::array<double, 2>{dot(val, e1), dot(val, e2)};
  };
  const auto fu_p = tangent(step, 0), fu_m = tangent(-step, 0);
  const auto fv_p = tangent(0, step), fv_m = tangent(0, -step);
  const double j00 = (fu_p[0] - fu_m[0]) / (2 * step), j10 = (fu_p[1] - fu_m[1]) / (2 * step);
  const double j01 = (fv_p[0] - fv_m[0]) / (2 * step), j11 = (fv_p[1] - fv_m[1]) / (2 * step);
  return j00 * j11 - j01 * j10;
}

int numeric_index(const Superflow& s, const FixedPoint& p, double step) {
  const double det = linearization_determinant(s, p.unit_direction(), step);
  if (std::abs(det) < 1e-8) throw VerificationFailure("degenerate linearization at fixed point");
  return det > 0 ? 1 : -1;
}

std::string to_string(LevelSetKind k) {
  switch (k) {
    case LevelSetKind::empty: return "empty";
    case LevelSetKind::isolated_points: return "isolated-points";
    case LevelSetKind::circles: return "circles";
    case LevelSetKind::great_circle_arcs: return "great-circle-arcs";
  }
  return "";
}

double level_set_lower_threshold() { return -(2 + std::sqrt(5.0)) / 5; }
double level_set_upper_threshold() { return (2 + std::sqrt(5.0)) / 27; }

LevelSetClass classify_level_set_exact(const Golden& xi) {
  const G lo = -G(2, 1) / G(5);
  const G hi = G(2, 1) / G(27);
  LevelSetClass c;
  c.xi = xi.to_double();
  auto set = [&](int num, int count, LevelSetKind kind) {
    c.case_number = num;
    c.expected_count = count;
    c.component_count = count;
    c.component_kind = kind;
  };
  if ((xi - lo).sign() < 0) set(1, 0, LevelSetKind::empty);
  else if (xi == lo) set(2, 12, LevelSetKind::isolated_points);
  else if (xi.sign() < 0) set(3, 12, LevelSetKind::circles);
  else if (xi.is_zero()) set(4, 60, LevelSetKind::great_circle_arcs);
  else if ((xi - hi).sign() < 0) set(5, 20, LevelSetKind::circles);
  else if (xi == hi) set(6, 20, LevelSetKind::isolated_points);
  else set(7, 0, LevelSetKind::empty);
  return c;
}

namespace {

struct Icosphere {
  std::vector<Vec3> vertices;
  std::vector<std::array<int, 3>> triangles;
};

Icosphere make_icosphere(int n) {
  const double phi = (1 + std::sqrt(5.0)) / 2;
  std::vector<Vec3> base;
  for (int a : {-1, 1})
    for (int b : {-1, 1}) {
      base.push_back({0, double(a), b * phi});
      base.push_back({double(a), b * phi, 0});
      base.push_back({b * phi, 0, double(a)});
    }
  std::vector<std::array<int, 3>> faces;
  auto d2 = [&](int i, int j) {
    Vec3 d{base[i][0] - base[j][0], base[i][1] - base[j][1], base[i][2] - base[j][2]};
    return dot(d, d);
  };
  for (int i = 0; i < 12; ++i)
    for (int j = i + 1; j < 12; ++j)
      for (int k = j + 1; k < 12; ++k)
        if (std::abs(d2(i, j) - 4) < 1e-9 && std::abs(d2(j, k) - 4) < 1e-9 && std::abs(d2(i, k) - 4) < 1e-9)
          faces.push_back({i, j, k});

  Icosphere s;
  std::unordered_map<std::uint64_t, int> ids;
  // Key: sorted (base vertex, integer weight) pairs with nonzero weight.
  auto vertex_id = [&](const std::array<int, 3>& f, int wa, int wb, int wc) {
    std::vector<std::pair<int, int>> parts;
    for (auto [v, w] : {std::pair{f[0], wa}, std::pair{f[1], wb}, std::pair{f[2], wc}})
      if (w > 0) parts.emplace_back(v, w);
    std::sort(parts.begin(), parts.end());
    std::uint64_t key = 0;
    for (const auto& [v, w] : parts) key = (key << 16) | (std::uint64_t(v) << 12) | std::uint64_t(w);
    auto it = ids.find(key);
    if (it != ids.end()) return it->second;
    Vec3 p{};
    for (const auto& [v, w] : parts)
      for (int c = 0; c < 3; ++c) p[c] += w * base[v][c];
    s.vertices.push_back(normalized(p));
    ids.emplace(key, static_cast<int>(s.vertices.size()) - 1);
    return static_cast<int>(s.vertices.size()) - 1;
  };
  for (const auto& f : faces) {
    std::vector<std::vector<int>> row(n + 1);
    for (int i = 0; i <= n; ++i)
      for (int j = 0; j <= n - i; ++j) row[i].push_back(vertex_id(f, n - i - j, i, j));
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n - i; ++j) {
        s.triangles.push_back({row[i][j], row[i + 1][j], row[i][j + 1]});
        if (j + 1 < n - i) s.triangles.push_back({row[i + 1][j], row[i + 1][j + 1], row[i][j + 1]});
      }
  }
  return s;
}

/// Small fixed rotation so grid vertices avoid the symmetry planes of V.
Vec3 jitter(const Vec3& p) {
  const double a = 1.3e-3, b = 0.7e-3, c = 1.1e-3;
  Vec3 q = p;
  auto rot = [](Vec3 v, int i, int j, double t) {
    const double ci = std::cos(t), si = std::sin(t);
    const double vi = v[i], vj = v[j];
    v[i] = ci * vi - si * vj;
    v[j] = si * vi + ci * vj;
    return v;
  };
  q = rot(q, 0, 1, a);
  q = rot(q, 1, 2, b);
  q = rot(q, 2, 0, c);
  return q;
}

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(int a, int b) { parent[find(a)] = find(b); }
};

}  // namespace

std::vector<ZeroScanHit> scan_sphere_zeros(const Superflow& s, int resolution) {
  if (!s.spherical) throw InvalidArgument("zero scan needs a superflow preserving the sphere");
  if (resolution < 1 || resolution > 4095) throw InvalidArgument("scan resolution must be in [1, 4095]");
  const CompiledField f(s.field);
  Icosphere grid = make_icosphere(resolution);
  std::vector<Vec3> values(grid.vertices.size());
  for (std::size_t i = 0; i < grid.vertices.size(); ++i) {
    grid.vertices[i] = jitter(grid.vertices[i]);
    f.eval(grid.vertices[i].data(), values[i].data());
  }
  std::vector<ZeroScanHit> hits;
  for (auto tri : grid.triangles) {
    const Vec3 &a = grid.vertices[tri[0]], &b = grid.vertices[tri[1]], &d = grid.vertices[tri[2]];
    Vec3 c = normalized({a[0] + b[0] + d[0], a[1] + b[1] + d[1], a[2] + b[2] + d[2]});
    const Vec3 ab{b[0] - a[0], b[1] - a[1], b[2] - a[2]}, ad{d[0] - a[0], d[1] - a[1], d[2] - a[2]};
    if (dot(cross(ab, ad), c) < 0) std::swap(tri[1], tri[2]);
    Vec3 seed = std::abs(c[0]) < 0.9 ? Vec3{1, 0, 0} : Vec3{0, 1, 0};
    const Vec3 e1 = normalized(cross(seed, c));
    const Vec3 e2 = cross(c, e1);
    double angle[3];
    for (int k = 0; k < 3; ++k) angle[k] = std::atan2(dot(values[tri[k]], e2), dot(values[tri[k]], e1));
    double total = 0;
    for (int k = 0; k < 3; ++k) {
      double step = angle[(k + 1) % 3] - angle[k];
      while (step > M_PI) step -= 2 * M_PI;
      while (step < -M_PI) step += 2 * M_PI;
      total += step;
    }
    const int w = static_cast<int>(std::lround(total / (2 * M_PI)));
    if (w != 0) hits.push_back({c, w});
  }
  return hits;
}

LevelSetClass classify_level_set(double xi, int resolution) {
  if (resolution < 64 || resolution > 4095) throw InvalidArgument("level-set resolution must be in [64, 4095]");
  const double lo = level_set_lower_threshold(), hi = level_set_upper_threshold();
  if (std::abs(xi - lo) < 1e-9 || std::abs(xi - hi) < 1e-9)
    throw InvalidArgument("boundary case, refine manually");

  LevelSetClass c = classify_level_set_exact(Golden(Rational(0)));
  if (xi < lo) c = classify_level_set_exact(G(-1));
  else if (xi < 0) c = classify_level_set_exact(G(Rational(-1, 20)));
  else if (xi > hi) c = classify_level_set_exact(G(1));
  else if (xi > 0) c = classify_level_set_exact(G(Rational(1, 20)));
  c.xi = xi;
  c.resolution = resolution;

  const CompiledPoly v(icosahedral_integral());
  Icosphere grid = make_icosphere(resolution);
  const std::size_t nv = grid.vertices.size();
  std::vector<char> positive(nv);
  for (std::size_t i = 0; i < nv; ++i) {
    grid.vertices[i] = jitter(grid.vertices[i]);
    positive[i] = v(grid.vertices[i].data()) - xi >= 0;
  }

  std::vector<char> cut(nv, 0);
  if (xi == 0.0) {
    const double radius = std::max(0.03, 6.0 / resolution);
    const double cos_r = std::cos(radius);
    std::vector<Vec3> crossings;
    for (const auto& p : signed_cyclic_orbit(G::phi(), G::phi().inverse(), 1)) crossings.push_back(to_unit(p));
    for (const auto& p : signed_cyclic_orbit(1, 0, 0)) crossings.push_back(to_unit(p));
    for (std::size_t i = 0; i < nv; ++i)
      for (const auto& q : crossings)
        if (dot(grid.vertices[i], q) > cos_r) cut[i] = 1;
  }

  const int nt = static_cast<int>(grid.triangles.size());
  UnionFind uf(nt);
  std::vector<char> active(nt, 0);
  std::unordered_map<std::uint64_t, int> edge_owner;
  for (int t = 0; t < nt; ++t) {
    const auto& tri = grid.triangles[t];
    if (cut[tri[0]] || cut[tri[1]] || cut[tri[2]]) continue;
    for (int e = 0; e < 3; ++e) {
      const int a = tri[e], b = tri[(e + 1) % 3];
      if (positive[a] == positive[b]) continue;
      active[t] = 1;
      const std::uint64_t key = (std::uint64_t(std::min(a, b)) << 32) | std::uint64_t(std::max(a, b));
      auto [it, inserted] = edge_owner.emplace(key, t);
      if (!inserted) uf.unite(t, it->second);
    }
  }
  int count = 0;
  for (int t = 0; t < nt; ++t)
    if (active[t] && uf.find(t) == t) ++count;
  c.component_count = count;
  return c;
}

}  // namespace superflow
