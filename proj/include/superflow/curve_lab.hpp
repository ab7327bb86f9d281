#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "superflow/flow_engine.hpp"
#include "superflow/multipoly.hpp"

namespace superflow {

// Change of variables P = phi^2 p^2 - q^2, Q = phi^2 q^2 - r^2, R = phi^2 r^2 - p^2.

struct PQRState {
  double P = 0, Q = 0, R = 0;
};

PQRState pqr_transform(const std::array<double, 3>& x);
/// Squared coordinates (p^2, q^2, r^2) from 4 phi p^2 = phi^2 P + Q + phi^-2 R
/// and its cyclic shifts. Throws InvalidArgument for a negative square.
std::array<double, 3> pqr_inverse(const PQRState& s);

/// True iff -(2+sqrt5)/5 < xi < (2+sqrt5)/27.
bool admissible_xi(double xi);

/// The polynomials f, g, h, l, t, p, q of the reduction.
struct PolynomialFamily {
  MultiPoly<Golden> f, g, h, l, t, p, q;
};

/// Variables (X, xi, phi) with phi kept formal and rational coefficients.
VarList formal_curve_vars();
/// Variables (X, xi).
VarList curve_vars();

PolynomialFamily polynomial_family_formal();
/// phi specialized to the golden ratio; xi stays an indeterminate.
PolynomialFamily polynomial_family_symbolic();
/// Univariate in X for an exact xi.
PolynomialFamily polynomial_family(const Golden& xi);

/// Weighted degree with weights (wX, wxi, wphi) if all terms agree, else -1.
int weighted_degree(const MultiPoly<Golden>& formal, const std::array<int, 3>& weights);

/// X^k a(U / X) with U = X^3 - phi X^2 - xi, for a in the (X, xi) ring.
MultiPoly<Golden> upsilon_substitution(const MultiPoly<Golden>& a, int k);

/// Solves X^k a(U/X) = rhs for a of degree k by matching leading powers of X.
/// Returns nothing if a remainder is left.
std::optional<MultiPoly<Golden>> solve_upsilon_preimage(const MultiPoly<Golden>& rhs, int k);

struct IdentityCheck {
  std::string name;
  bool holds = false;
  std::string offending;  // first nonzero term of the difference, if any
};

struct IdentityReport {
  std::vector<IdentityCheck> checks;
  bool all_hold() const;
  const IdentityCheck& operator[](const std::string& name) const;
};

/// Exact identities with xi left symbolic: math-p, math-q, ties, q = 4t^3,
/// the recurrent solves for p and q, and the degree-30 form of the composed curve
/// together with the polynomial identities used on the way.
IdentityReport verify_identity_chain();
/// Same chain with xi specialized to an exact value.
IdentityReport verify_identity_chain(const Golden& xi);

/// Difference of the two sides of the composed curve after X -> P, phi -> P+Q+R (except
/// the phi^5 factor), xi -> PQR, P,Q,R -> quadratic forms in p,q,r, Y -> P'.
/// printed_r substitutes the variant R -> phi^2 q^2 - p^2, which does not close.
MultiPoly<Golden> comp_homogenization_difference(bool printed_r = false);

// Numeric checks along icosahedral orbits.

enum class PQRChoice { P, Q, R };
std::string to_string(PQRChoice c);

/// Unit vector with V = xi, found by bisection along an arc of the sphere.
std::vector<double> level_set_start(double xi);

/// V at the first sample of the trace.
double measured_xi(const OrbitTrace& trace);

/// Max over samples of the normalized defect of X (Y^2 phi^5 + 10 f g)^2 = 500 h^2 g^3
/// with (X, Y) = (P, P') and derivatives from the exact right-hand side.
double curve_residual_prop2(const OrbitTrace& trace, double xi, PQRChoice which = PQRChoice::P);

struct TripleReductionReport {
  std::vector<double> upsilon, upsilon_prime;
  double curve_residual = 0;     // normalized (Y^2 phi^5 + l t)^2 - 4 t^3
  double root_recovery = 0;      // max |sorted roots - sorted {P,Q,R}|
  double upsilon_agreement = 0;  // max spread of Upsilon computed from P, Q, R
  int segments = 0;              // maximal runs with X away from 0
  int skipped = 0;
};

TripleReductionReport triple_reduction(const OrbitTrace& trace, double xi, PQRChoice which = PQRChoice::P);

struct RationalCurveReport {
  double printed_residual = 0;    // 4(36Y^2 + 5(42X-1)C)^2 = 375 C^3
  double corrected_residual = 0;  // (36Y^2 + 5(42X-1)C)^2 = 375 C^3
};

/// Along a xi = -phi^3/6 orbit, with (X, Y) = phi^-2 (Upsilon, Upsilon').
RationalCurveReport rational_curve_residual(const OrbitTrace& trace, PQRChoice which = PQRChoice::P);

struct RecuBasReport {
  double recu = 0;          // relative defect of P'^2 / (P^4 - 2phi P^3 + phi^2 P^2 - 4 xi P) = 1280 phi^-2 p^2q^2r^2
  double bas = 0;           // defect of 64 phi^3 p^2q^2r^2 = 22PQR + ... + (sqrt5/2)(alpha - beta)
  double discriminant = 0;  // defect of (alpha-beta)^2 = (2P^2 - phi P + xi/P)^2 (P^2 - 2phi P + phi^2 - 4xi/P)
  double rys = 0;           // max of |P+Q+R - phi| and |PQR - xi|
  int skipped = 0;
};

RecuBasReport verify_recu_bas(const OrbitTrace& trace, double xi);

}  // namespace superflow
