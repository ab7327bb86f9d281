#pragma once

#include <algorithm>
#include <cmath>
#include <string>

#include <boost/numeric/odeint.hpp>

#include "superflow/errors.hpp"
#include "superflow/flow_engine.hpp"

namespace superflow::detail {

template <class State>
bool finite_state(const State& y) {
  for (const auto& c : y)
    if (!std::isfinite(std::abs(c))) return false;
  return true;
}

/// Integrates y' = rhs(y) from t0 to t1, calling observe(t, y) after every
/// accepted step (and once at t0). observe may throw to abort.
template <class State, class Rhs, class Observe>
void drive(const Rhs& rhs, State y, double t0, double t1, const IntegrationOptions& o, const Observe& observe) {
  // Integrate in tau = |t - t0| with the sign folded into the right-hand
  // side; the step limiter of the controlled stepper assumes positive steps.
  const double dir = t1 >= t0 ? 1.0 : -1.0;
  const double span = std::abs(t1 - t0);
  auto system = [&](const State& x, State& dxdt, double) {
    rhs(x, dxdt);
    if (dir < 0)
      for (auto& c : dxdt) c = -c;
  };
  auto emit = [&](double tau, const State& x) {
    if (!finite_state(x)) throw IntegrationError("non-finite state during integration");
    observe(tau == span ? t1 : t0 + dir * tau, x);
  };
  emit(0.0, y);
  if (span == 0.0) return;
  double tau = 0.0;
  if (o.stepper == Stepper::rk4_fixed) {
    boost::numeric::odeint::runge_kutta4<State> rk4;
    const double h = std::abs(o.rk4_step);
    while (tau < span) {
      const double step = std::min(h, span - tau);
      rk4.do_step(system, y, tau, step);
      tau = span - (tau + step) < 1e-15 * std::max(1.0, span) ? span : tau + step;
      emit(tau, y);
    }
    return;
  }
  namespace odeint = boost::numeric::odeint;
  auto ctrl = odeint::make_controlled(o.atol, o.rtol, o.max_step, odeint::runge_kutta_dopri5<State>());
  double dt = std::min(o.max_step, span);
  while (tau < span) {
    bool last = false;
    if (tau + dt >= span) {
      dt = span - tau;
      last = true;
    }
    const double before = tau;
    if (ctrl.try_step(system, y, tau, dt) == odeint::fail) {
      if (dt < o.min_step) throw IntegrationError("step size underflow near t = " + std::to_string(t0 + dir * before));
      continue;
    }
    if (last) tau = span;
    emit(tau, y);
  }
}

}  // namespace superflow::detail
