#pragma once

#include <complex>
#include <string>
#include <vector>

#include "superflow/errors.hpp"
#include "superflow/superflows.hpp"

namespace superflow {

enum class Stepper { rk4_fixed, rk45_adaptive };
enum class Direction { forward_field, backward_system };

std::string to_string(Stepper s);
std::string to_string(Direction d);
Stepper parse_stepper(const std::string& text);

struct IntegrationOptions {
  Stepper stepper = Stepper::rk45_adaptive;
  double atol = 1e-10;
  double rtol = 1e-10;
  double max_step = 1e-2;
  double rk4_step = 1e-3;
  double min_step = 1e-14;
  /// Orbit is singular once |D(y)| < singular_threshold * |y|^deg D.
  double singular_threshold = 1e-6;
  /// Backward system on the sphere aborts when | |y| - 1 | exceeds this.
  double sphere_tolerance = 1e-8;
};

struct OrbitTrace {
  std::vector<double> times;
  std::vector<std::vector<double>> states;
  std::vector<std::string> integral_labels;
  std::vector<double> residuals;  // max |F(y(t)) - F(y(0))| per integral
  Stepper stepper = Stepper::rk45_adaptive;
  Direction direction = Direction::forward_field;
  const std::vector<double>& final_state() const { return states.back(); }
  double max_residual() const;
};

/// Raised when the denominator vanishes along the path.
class SingularOrbit : public IntegrationError {
 public:
  SingularOrbit(double t, std::vector<double> state)
      : IntegrationError("singular orbit near t = " + std::to_string(t)), last_time(t), last_state(std::move(state)) {}
  double last_time;
  std::vector<double> last_state;
};

/// Solves y' = V(y) from x0 to t_end (either sign); the final state is the
/// flow map F(x0, t_end). tol sets both absolute and relative tolerance.
OrbitTrace integrate_field(const RationalVF<Golden>& v, const std::vector<double>& x0, double t_end,
                           double tol = 1e-10, const IntegrationOptions& options = {},
                           const std::vector<MultiPoly<Golden>>& integrals = {},
                           const std::vector<std::string>& labels = {});

/// Integrates p' = -V(p). For spherical superflows x0 must be a unit vector
/// (within 1e-12) and the polynomial right-hand side is used, since the
/// denominator equals 1 on the sphere. Records drift of the first integrals.
OrbitTrace integrate_backward_system(const Superflow& s, const std::vector<double>& x0, double t_end,
                                     double tol = 1e-10, const IntegrationOptions& options = {});

/// Flow map F(x, t) at the given tolerance.
std::vector<double> flow_map(const RationalVF<Golden>& v, const std::vector<double>& x, double t, double tol = 1e-10,
                             const IntegrationOptions& options = {});

struct TranslationReport {
  std::vector<double> direct;    // F(x, t + s)
  std::vector<double> composed;  // F(F(x, t), s)
  double residual = 0.0;         // max norm of the difference
  bool passed = false;
};

TranslationReport check_translation_equation(const RationalVF<Golden>& v, const std::vector<double>& x, double t,
                                             double s, double tol = 1e-7, double integrator_tol = 1e-10);

/// Max-norm residual of F(lambda x, t / lambda) - lambda F(x, t).
double scaling_law_residual(const RationalVF<Golden>& v, const std::vector<double>& x, double t, double lambda,
                            double integrator_tol = 1e-10);

/// Max-norm residual of F(c y(s), 1) - c y(s - c), where y is the backward
/// orbit through x0 and c plays the role of the second time parameter.
double three_parameter_residual(const Superflow& sf, const std::vector<double>& x0, double s, double c,
                                double integrator_tol = 1e-10);

// Singular orbit y = phi x of the icosahedral superflow.

/// coth: T = coth(2 sqrt5 t), the constant chosen in the text, which makes
/// p and r complex for real t. tanh: T = tanh(2 sqrt5 t), the real orbits.
enum class SingularBranch { coth, tanh };

std::string to_string(SingularBranch b);

struct SingularState {
  double t = 0.0;
  double T = 0.0;
  std::complex<double> m;  // m^5 = sqrt(1 - T^2) + i T, principal root
  std::complex<double> p, r;
};

/// Closed form p = (m + 1/m) / (2 sqrt(phi^2+1)), r = (m - 1/m) / (2i).
/// Throws InvalidArgument at t = 0 on the coth branch.
SingularState singular_closed_form(double t, SingularBranch branch = SingularBranch::coth);

/// Closed form restated with the printed radicand (sqrt(256 - T^2) + iT) / 16.
SingularState singular_closed_form_printed(double t);

struct QuinticReport {
  double circle = 0.0;      // |p^2 (1 + phi^2) + r^2 - 1|
  double quintic = 0.0;     // |16 r^5 - 20 r^3 + 5 r - T|
  double integrated = 0.0;  // relative residual of the exponential form
  double product = 0.0;     // |prod (r - sin(2 pi j / 5)) - T / 16|
};

QuinticReport verify_r_quintic(double t, SingularBranch branch = SingularBranch::coth);

/// Complex RK integration of the reduced (p, r) system from the closed form
/// at t0, compared with the closed form at every sample up to t1.
struct SingularComparison {
  std::vector<double> times;
  double max_difference = 0.0;
};

SingularComparison compare_singular_with_ode(double t0, double t1, SingularBranch branch = SingularBranch::coth,
                                             double tol = 1e-12);

}  // namespace superflow
