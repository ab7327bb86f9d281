#include "superflow/flow_engine.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

#include "superflow/compiled.hpp"
#include "superflow/detail/drive.hpp"

namespace superflow {
using detail::drive;

namespace {

using RealState = std::vector<double>;
using ComplexState = std::vector<std::complex<double>>;

double norm(const std::vector<double>& y) {
  double s = 0;
  for (double c : y) s += c * c;
  return std::sqrt(s);
}

double max_diff(const std::vector<double>& a, const std::vector<double>& b) {
  if (a.size() != b.size()) throw DimensionMismatch("state size");
  double m = 0;
  for (std::size_t i = 0; i < a.size(); ++i) m = std::max(m, std::abs(a[i] - b[i]));
  return m;
}

void record_drift(OrbitTrace& trace, const std::vector<MultiPoly<Golden>>& integrals) {
  trace.residuals.clear();
  for (const auto& f : integrals) {
    const CompiledPoly c(f);
    const double start = c(trace.states.front().data());
    double drift = 0;
    for (const auto& s : trace.states) drift = std::max(drift, std::abs(c(s.data()) - start));
    trace.residuals.push_back(drift);
  }
}

IntegrationOptions with_tol(IntegrationOptions o, double tol) {
  if (!(tol > 0)) throw InvalidArgument("tolerance must be positive");
  o.atol = o.rtol = tol;
  return o;
}

}  // namespace

std::string to_string(Stepper s) { return s == Stepper::rk4_fixed ? "rk4-fixed" : "rk45-adaptive"; }
std::string to_string(Direction d) { return d == Direction::forward_field ? "forward-field" : "backward-system"; }

Stepper parse_stepper(const std::string& text) {
  if (text == "rk4" || text == "rk4-fixed") return Stepper::rk4_fixed;
  if (text == "rk45" || text == "rk45-adaptive") return Stepper::rk45_adaptive;
  throw InvalidArgument("unknown stepper '" + text + "'");
}

double OrbitTrace::max_residual() const {
  double m = 0;
  for (double r : residuals) m = std::max(m, r);
  return m;
}

OrbitTrace integrate_field(const RationalVF<Golden>& v, const std::vector<double>& x0, double t_end, double tol,
                           const IntegrationOptions& options, const std::vector<MultiPoly<Golden>>& integrals,
                           const std::vector<std::string>& labels) {
  const IntegrationOptions o = with_tol(options, tol);
  if (static_cast<int>(x0.size()) != v.dim()) throw DimensionMismatch("start point dimension");
  const CompiledField f(v);
  const int ddeg = v.denominator_degree();
  auto singular = [&](const RealState& y) {
    const double d = f.denominator()(y.data());
    return std::abs(d) < o.singular_threshold * std::pow(norm(y), ddeg) || d == 0.0;
  };
  if (singular(x0)) throw SingularOrbit(0.0, x0);
  OrbitTrace trace;
  trace.stepper = o.stepper;
  trace.direction = Direction::forward_field;
  trace.integral_labels = labels;
  auto rhs = [&](const RealState& y, RealState& dy) {
    dy.resize(y.size());
    f.eval(y.data(), dy.data());
  };
  drive(rhs, x0, 0.0, t_end, o, [&](double t, const RealState& y) {
    if (singular(y)) throw SingularOrbit(trace.times.empty() ? 0.0 : trace.times.back(),
                                         trace.states.empty() ? x0 : trace.states.back());
    trace.times.push_back(t);
    trace.states.push_back(y);
  });
  record_drift(trace, integrals);
  return trace;
}

OrbitTrace integrate_backward_system(const Superflow& s, const std::vector<double>& x0, double t_end, double tol,
                                     const IntegrationOptions& options) {
  const IntegrationOptions o = with_tol(options, tol);
  if (x0.size() != 3) throw DimensionMismatch("start point dimension");
  OrbitTrace trace;
  trace.direction = Direction::backward_system;
  trace.stepper = o.stepper;
  trace.integral_labels = s.integral_labels;
  if (!s.spherical) {
    auto t = integrate_field(s.field, x0, -t_end, tol, options, s.first_integrals, s.integral_labels);
    for (double& time : t.times) time = -time;
    t.direction = Direction::backward_system;
    return t;
  }
  if (std::abs(norm(x0) - 1.0) > 1e-12) throw InvalidArgument("start point must lie on the unit sphere");
  std::vector<CompiledPoly> nums;
  for (const auto& n : s.field.numerators()) nums.emplace_back(n);
  auto rhs = [&](const RealState& y, RealState& dy) {
    dy.resize(3);
    for (int i = 0; i < 3; ++i) dy[i] = -nums[i](y.data());
  };
  drive(rhs, x0, 0.0, t_end, o, [&](double t, const RealState& y) {
    if (std::abs(norm(y) - 1.0) > o.sphere_tolerance)
      throw IntegrationError("orbit left the unit sphere near t = " + std::to_string(t));
    trace.times.push_back(t);
    trace.states.push_back(y);
  });
  record_drift(trace, s.first_integrals);
  return trace;
}

std::vector<double> flow_map(const RationalVF<Golden>& v, const std::vector<double>& x, double t, double tol,
                             const IntegrationOptions& options) {
  return integrate_field(v, x, t, tol, options).final_state();
}

TranslationReport check_translation_equation(const RationalVF<Golden>& v, const std::vector<double>& x, double t,
                                             double s, double tol, double integrator_tol) {
  TranslationReport r;
  r.direct = flow_map(v, x, t + s, integrator_tol);
  r.composed = flow_map(v, flow_map(v, x, t, integrator_tol), s, integrator_tol);
  r.residual = max_diff(r.direct, r.composed);
  r.passed = r.residual <= tol;
  return r;
}

double scaling_law_residual(const RationalVF<Golden>& v, const std::vector<double>& x, double t, double lambda,
                            double integrator_tol) {
  if (lambda == 0.0) throw InvalidArgument("scaling factor must be nonzero");
  std::vector<double> lx(x);
  for (double& c : lx) c *= lambda;
  auto a = flow_map(v, lx, t / lambda, integrator_tol);
  auto b = flow_map(v, x, t, integrator_tol);
  for (double& c : b) c *= lambda;
  return max_diff(a, b);
}

double three_parameter_residual(const Superflow& sf, const std::vector<double>& x0, double s, double c,
                                double integrator_tol) {
  std::vector<double> ys = integrate_backward_system(sf, x0, s, integrator_tol).final_state();
  std::vector<double> ysc = integrate_backward_system(sf, x0, s - c, integrator_tol).final_state();
  for (double& v : ys) v *= c;
  for (double& v : ysc) v *= c;
  return max_diff(flow_map(sf.field, ys, 1.0, integrator_tol), ysc);
}

// Singular orbit.

namespace {

const double kPhi = (1 + std::sqrt(5.0)) / 2;
const double kSqrt5 = std::sqrt(5.0);

double branch_T(double t, SingularBranch b) {
  const double a = 2 * kSqrt5 * t;
  if (b == SingularBranch::tanh) return std::tanh(a);
  if (t == 0.0) throw InvalidArgument("T = coth(2 sqrt5 t) is undefined at t = 0");
  return 1.0 / std::tanh(a);
}

std::complex<double> principal_root5(std::complex<double> w) {
  return std::polar(std::pow(std::abs(w), 0.2), std::arg(w) / 5.0);
}

SingularState from_m(double t, double T, std::complex<double> m) {
  const std::complex<double> i(0, 1);
  SingularState s;
  s.t = t;
  s.T = T;
  s.m = m;
  s.p = (m + 1.0 / m) / (2 * std::sqrt(kPhi * kPhi + 1));
  s.r = (m - 1.0 / m) / (2.0 * i);
  return s;
}

void singular_rhs(const ComplexState& y, ComplexState& dy) {
  const auto p = y[0], r = y[1];
  const auto common = (std::pow(kPhi, 4) * p * p - r * r) * (p * p / (kPhi * kPhi) - r * r);
  dy.resize(2);
  dy[0] = -2 * kSqrt5 * common * p * r;
  dy[1] = 10 * kPhi * common * p * p;
}

}  // namespace

std::string to_string(SingularBranch b) { return b == SingularBranch::coth ? "coth" : "tanh"; }

SingularState singular_closed_form(double t, SingularBranch branch) {
  const double T = branch_T(t, branch);
  const std::complex<double> i(0, 1);
  // sqrt(1 - T^2) is imaginary when |T| > 1; take the root on the positive imaginary axis.
  const std::complex<double> root = std::sqrt(std::complex<double>(1 - T * T, 0.0));
  return from_m(t, T, principal_root5(root + i * T));
}

SingularState singular_closed_form_printed(double t) {
  const double T = branch_T(t, SingularBranch::coth);
  const std::complex<double> i(0, 1);
  const std::complex<double> root = std::sqrt(std::complex<double>(256 - T * T, 0.0));
  return from_m(t, T, principal_root5((root + i * T) / 16.0));
}

QuinticReport verify_r_quintic(double t, SingularBranch branch) {
  const SingularState s = singular_closed_form(t, branch);
  const auto p = s.p, r = s.r;
  QuinticReport q;
  q.circle = std::abs(p * p * (1 + kPhi * kPhi) + r * r - 1.0);
  q.quintic = std::abs(16.0 * std::pow(r, 5) - 20.0 * std::pow(r, 3) + 5.0 * r - s.T);
  const auto lhs = std::pow(4.0 * r * r - 2.0 * r - 1.0, 2) * (r + 1.0) /
                   (std::pow(4.0 * r * r + 2.0 * r - 1.0, 2) * (r - 1.0));
  const double w = std::exp(4 * kSqrt5 * t) * (branch == SingularBranch::coth ? 1.0 : -1.0);
  q.integrated = std::abs(lhs - w) / std::abs(w);
  std::complex<double> prod = 1.0;
  for (int j = 0; j < 5; ++j) prod *= r - std::sin(2 * M_PI * j / 5);
  q.product = std::abs(prod - s.T / 16.0);
  return q;
}

SingularComparison compare_singular_with_ode(double t0, double t1, SingularBranch branch, double tol) {
  const SingularState start = singular_closed_form(t0, branch);
  IntegrationOptions o;
  o.atol = o.rtol = tol;
  SingularComparison c;
  drive<ComplexState>(singular_rhs, ComplexState{start.p, start.r}, t0, t1, o, [&](double t, const ComplexState& y) {
    const SingularState exact = singular_closed_form(t, branch);
    c.times.push_back(t);
    c.max_difference = std::max({c.max_difference, std::abs(y[0] - exact.p), std::abs(y[1] - exact.r)});
  });
  return c;
}

}  // namespace superflow
