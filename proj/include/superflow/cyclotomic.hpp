#pragma once

#include <complex>
#include <compare>
#include <concepts>
#include <iosfwd>
#include <memory>
#include <string>
#include <vector>

#include "superflow/golden.hpp"

namespace superflow {

/// The cyclotomic field Q(zeta_N), zeta_N = exp(2 pi i / N).
///
/// Elements are stored in the power basis 1, zeta, ..., zeta^(phi(N)-1) and
/// reduced modulo the integer cyclotomic polynomial Phi_N.
class CyclotomicField {
 public:
  explicit CyclotomicField(int order);

  int order() const { return order_; }
  int degree() const { return static_cast<int>(modulus_.size()) - 1; }
  /// Coefficients of Phi_N, lowest degree first; monic.
  const std::vector<long>& modulus() const { return modulus_; }

 private:
  int order_;
  std::vector<long> modulus_;
};

using CyclotomicFieldPtr = std::shared_ptr<const CyclotomicField>;

CyclotomicFieldPtr make_cyclotomic_field(int order);

/// Exact element of Q(zeta_N).
///
/// A value constructed from an integer or rational carries no field and
/// adopts the field of whatever it is combined with.
class Cyclotomic {
 public:
  Cyclotomic() = default;
  template <std::integral I>
  Cyclotomic(I value) : coeffs_{Rational(static_cast<long>(value))} {}  // NOLINT: implicit for Eigen
  explicit Cyclotomic(Rational value) : coeffs_{std::move(value)} { coeffs_[0].canonicalize(); }
  Cyclotomic(CyclotomicFieldPtr field, std::vector<Rational> coeffs);

  /// zeta_N^k for any integer k.
  static Cyclotomic zeta(const CyclotomicFieldPtr& field, long k);
  /// sqrt(-1); needs 4 | N.
  static Cyclotomic imaginary_unit(const CyclotomicFieldPtr& field);
  /// cos(pi p / q); needs 2q | N.
  static Cyclotomic cos_pi(const CyclotomicFieldPtr& field, long p, long q);
  /// sin(pi p / q); needs 2q | N and 4 | N.
  static Cyclotomic sin_pi(const CyclotomicFieldPtr& field, long p, long q);
  /// sqrt(2); needs 8 | N.
  static Cyclotomic sqrt2(const CyclotomicFieldPtr& field);
  /// sqrt(5); needs 5 | N.
  static Cyclotomic sqrt5(const CyclotomicFieldPtr& field);

  const CyclotomicFieldPtr& field() const { return field_; }
  /// Power-basis coordinates; a single entry when the value has no field.
  const std::vector<Rational>& coefficients() const { return coeffs_; }

  bool is_zero() const;
  bool is_rational() const;
  Cyclotomic inverse() const;
  Cyclotomic pow(int exponent) const;
  /// Complex conjugation zeta -> zeta^-1.
  Cyclotomic complex_conjugate() const;
  std::complex<double> to_complex() const;
  std::string to_string() const;

  Cyclotomic& operator+=(const Cyclotomic& o);
  Cyclotomic& operator-=(const Cyclotomic& o);
  Cyclotomic& operator*=(const Cyclotomic& o);
  Cyclotomic& operator/=(const Cyclotomic& o);

  friend Cyclotomic operator+(Cyclotomic x, const Cyclotomic& y) { return x += y; }
  friend Cyclotomic operator-(Cyclotomic x, const Cyclotomic& y) { return x -= y; }
  friend Cyclotomic operator*(Cyclotomic x, const Cyclotomic& y) { return x *= y; }
  friend Cyclotomic operator/(Cyclotomic x, const Cyclotomic& y) { return x /= y; }
  friend Cyclotomic operator-(const Cyclotomic& x);
  friend Cyclotomic operator+(const Cyclotomic& x) { return x; }

  friend bool operator==(const Cyclotomic& x, const Cyclotomic& y);
  friend std::strong_ordering canonical_compare(const Cyclotomic& x, const Cyclotomic& y);

 private:
  void lift_to(const CyclotomicFieldPtr& field);
  void adopt_field(const Cyclotomic& other);

  CyclotomicFieldPtr field_;
  std::vector<Rational> coeffs_{Rational(0)};
};

/// Embeds a golden number; a nonzero sqrt5 part needs 5 | N.
Cyclotomic to_cyclotomic(const Golden& x, const CyclotomicFieldPtr& field);

std::ostream& operator<<(std::ostream& os, const Cyclotomic& x);

}  // namespace superflow
