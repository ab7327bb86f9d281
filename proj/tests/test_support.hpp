#pragma once

#include <random>
#include <vector>

#include "superflow/multipoly.hpp"

namespace superflow::testing {

inline Rational random_rational(std::mt19937& rng, int span = 9) {
  std::uniform_int_distribution<int> num(-span, span);
  std::uniform_int_distribution<int> den(1, span);
  Rational r(num(rng), den(rng));
  r.canonicalize();
  return r;
}

inline Golden random_golden(std::mt19937& rng) {
  return Golden(random_rational(rng), random_rational(rng));
}

inline Golden random_nonzero_golden(std::mt19937& rng) {
  Golden g;
  do g = random_golden(rng);
  while (g.is_zero());
  return g;
}

inline std::vector<double> random_point(std::mt19937& rng, int n, double lo = -1.0, double hi = 1.0) {
  std::uniform_real_distribution<double> u(lo, hi);
  std::vector<double> p(n);
  for (auto& v : p) v = u(rng);
  return p;
}

}  // namespace superflow::testing
