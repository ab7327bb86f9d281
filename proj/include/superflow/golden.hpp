#pragma once

#include <compare>
#include <concepts>
#include <iosfwd>
#include <string>

#include <gmpxx.h>

namespace superflow {

using Rational = mpq_class;

/// Exact element a + b*sqrt(5) of the golden field Q(sqrt 5).
///
/// Both parts are GMP rationals kept in lowest terms. The only place a value
/// leaves the exact world is to_double(), where sqrt(5) is rounded once.
class Golden {
 public:
  Golden() = default;
  template <std::integral I>
  Golden(I value) : a_(static_cast<long>(value)) {}  // NOLINT: implicit for Eigen
  Golden(Rational a, Rational b = 0);

  static Golden sqrt5() { return Golden(0, 1); }
  /// (1 + sqrt 5) / 2
  static Golden phi();

  const Rational& rational_part() const { return a_; }
  const Rational& sqrt5_part() const { return b_; }

  bool is_zero() const { return sgn(a_) == 0 && sgn(b_) == 0; }
  bool is_rational() const { return sgn(b_) == 0; }

  Golden inverse() const;
  Golden pow(int exponent) const;

  /// Exact sign of the real number a + b*sqrt(5).
  int sign() const;

  double to_double() const;
  std::string to_string() const;

  Golden& operator+=(const Golden& o);
  Golden& operator-=(const Golden& o);
  Golden& operator*=(const Golden& o);
  Golden& operator/=(const Golden& o);

  friend Golden operator+(Golden x, const Golden& y) { return x += y; }
  friend Golden operator-(Golden x, const Golden& y) { return x -= y; }
  friend Golden operator*(Golden x, const Golden& y) { return x *= y; }
  friend Golden operator/(Golden x, const Golden& y) { return x /= y; }
  friend Golden operator-(const Golden& x) { return Golden(-x.a_, -x.b_); }
  friend Golden operator+(const Golden& x) { return x; }

  friend bool operator==(const Golden& x, const Golden& y) { return x.a_ == y.a_ && x.b_ == y.b_; }

  /// Lexicographic order on (a, b). Structural, not the real order.
  friend std::strong_ordering canonical_compare(const Golden& x, const Golden& y);

 private:
  Rational a_{0};
  Rational b_{0};
};

/// The Galois automorphism a + b sqrt5 -> a - b sqrt5.
Golden golden_conjugate(const Golden& x);

std::ostream& operator<<(std::ostream& os, const Golden& x);

}  // namespace superflow
