#include "superflow/golden.hpp"

#include <cmath>
#include <ostream>
#include <sstream>

#include "superflow/errors.hpp"

namespace superflow {

Golden::Golden(Rational a, Rational b) : a_(std::move(a)), b_(std::move(b)) {
  a_.canonicalize();
  b_.canonicalize();
}

Golden Golden::phi() { return Golden(Rational(1, 2), Rational(1, 2)); }

Golden& Golden::operator+=(const Golden& o) {
  a_ += o.a_;
  b_ += o.b_;
  return *this;
}

Golden& Golden::operator-=(const Golden& o) {
  a_ -= o.a_;
  b_ -= o.b_;
  return *this;
}

Golden& Golden::operator*=(const Golden& o) {
  Rational a = a_ * o.a_ + 5 * b_ * o.b_;
  Rational b = a_ * o.b_ + b_ * o.a_;
  a_ = std::move(a);
  b_ = std::move(b);
  return *this;
}

Golden& Golden::operator/=(const Golden& o) { return *this *= o.inverse(); }

Golden Golden::inverse() const {
  // (a + b s)^-1 = (a - b s) / (a^2 - 5 b^2); the norm vanishes only at 0.
  Rational norm = a_ * a_ - 5 * b_ * b_;
  if (sgn(norm) == 0) throw DivisionByZero();
  return Golden(a_ / norm, -b_ / norm);
}

Golden Golden::pow(int exponent) const {
  if (exponent < 0) return inverse().pow(-exponent);
  Golden result(1);
  Golden base = *this;
  while (exponent > 0) {
    if (exponent & 1) result *= base;
    base *= base;
    exponent >>= 1;
  }
  return result;
}

int Golden::sign() const {
  int sa = sgn(a_);
  int sb = sgn(b_);
  if (sb == 0) return sa;
  if (sa == 0) return sb;
  if (sa == sb) return sa;
  // Opposite signs: compare a^2 with 5 b^2.
  int c = cmp(Rational(a_ * a_), Rational(5 * b_ * b_));
  return c > 0 ? sa : (c < 0 ? sb : 0);
}

double Golden::to_double() const {
  static const double kSqrt5 = std::sqrt(5.0);
  return a_.get_d() + b_.get_d() * kSqrt5;
}

std::string Golden::to_string() const {
  std::ostringstream os;
  os << *this;
  return os.str();
}

std::strong_ordering canonical_compare(const Golden& x, const Golden& y) {
  int c = cmp(x.a_, y.a_);
  if (c == 0) c = cmp(x.b_, y.b_);
  return c < 0 ? std::strong_ordering::less
               : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
}

Golden golden_conjugate(const Golden& x) { return Golden(x.rational_part(), -x.sqrt5_part()); }

std::ostream& operator<<(std::ostream& os, const Golden& x) {
  const Rational& a = x.rational_part();
  const Rational& b = x.sqrt5_part();
  if (sgn(b) == 0) return os << a.get_str();
  if (sgn(a) != 0) os << a.get_str() << (sgn(b) > 0 ? "+" : "");
  return os << b.get_str() << "*sqrt5";
}

}  // namespace superflow
