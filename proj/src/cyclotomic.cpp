#include "superflow/cyclotomic.hpp"

#include <cmath>
#include <numbers>
#include <ostream>
#include <sstream>

#include "superflow/errors.hpp"

namespace superflow {
namespace {

using IntPoly = std::vector<long>;

IntPoly divide_exact(IntPoly num, const IntPoly& den) {
  // den is monic.
  const std::size_t dn = den.size() - 1;
  IntPoly quot(num.size() - dn, 0);
  for (std::size_t i = num.size() - 1; i + 1 > dn + 0 && i >= dn; --i) {
    long c = num[i];
    quot[i - dn] = c;
    for (std::size_t j = 0; j <= dn; ++j) num[i - dn + j] -= c * den[j];
    if (i == dn) break;
  }
  return quot;
}

IntPoly cyclotomic_polynomial(int n) {
  IntPoly p(n + 1, 0);
  p[0] = -1;
  p[n] = 1;
  for (int d = 1; d < n; ++d)
    if (n % d == 0) p = divide_exact(p, cyclotomic_polynomial(d));
  return p;
}

// Reduces a power-basis vector of arbitrary length modulo Phi_N.
std::vector<Rational> reduce(std::vector<Rational> c, const IntPoly& modulus) {
  const std::size_t deg = modulus.size() - 1;
  for (std::size_t i = c.size(); i-- > deg;) {
    if (sgn(c[i]) == 0) continue;
    Rational lead = c[i];
    for (std::size_t j = 0; j <= deg; ++j) c[i - deg + j] -= lead * modulus[j];
  }
  c.resize(deg);
  return c;
}

}  // namespace

CyclotomicField::CyclotomicField(int order) : order_(order) {
  if (order < 1) throw InvalidArgument("cyclotomic order must be positive");
  modulus_ = cyclotomic_polynomial(order);
}

CyclotomicFieldPtr make_cyclotomic_field(int order) {
  return std::make_shared<const CyclotomicField>(order);
}

Cyclotomic::Cyclotomic(CyclotomicFieldPtr field, std::vector<Rational> coeffs)
    : field_(std::move(field)) {
  if (!field_) {
    if (coeffs.size() != 1) throw InvalidArgument("fieldless cyclotomic must be rational");
    coeffs_ = std::move(coeffs);
    coeffs_[0].canonicalize();
    return;
  }
  for (auto& c : coeffs) c.canonicalize();
  coeffs_ = reduce(std::move(coeffs), field_->modulus());
}

Cyclotomic Cyclotomic::zeta(const CyclotomicFieldPtr& field, long k) {
  const long n = field->order();
  long e = ((k % n) + n) % n;
  std::vector<Rational> c(e + 1, Rational(0));
  c[e] = 1;
  return Cyclotomic(field, std::move(c));
}

Cyclotomic Cyclotomic::imaginary_unit(const CyclotomicFieldPtr& field) {
  if (field->order() % 4 != 0) throw InvalidArgument("sqrt(-1) needs 4 | N");
  return zeta(field, field->order() / 4);
}

Cyclotomic Cyclotomic::cos_pi(const CyclotomicFieldPtr& field, long p, long q) {
  if (field->order() % (2 * q) != 0) throw InvalidArgument("cos(pi p/q) needs 2q | N");
  long k = p * (field->order() / (2 * q));
  return (zeta(field, k) + zeta(field, -k)) * Cyclotomic(Rational(1, 2));
}

Cyclotomic Cyclotomic::sin_pi(const CyclotomicFieldPtr& field, long p, long q) {
  if (field->order() % (2 * q) != 0) throw InvalidArgument("sin(pi p/q) needs 2q | N");
  long k = p * (field->order() / (2 * q));
  Cyclotomic two_i = imaginary_unit(field) * Cyclotomic(2);
  return (zeta(field, k) - zeta(field, -k)) / two_i;
}

Cyclotomic Cyclotomic::sqrt2(const CyclotomicFieldPtr& field) {
  if (field->order() % 8 != 0) throw InvalidArgument("sqrt(2) needs 8 | N");
  long k = field->order() / 8;
  return zeta(field, k) + zeta(field, -k);
}

Cyclotomic Cyclotomic::sqrt5(const CyclotomicFieldPtr& field) {
  if (field->order() % 5 != 0) throw InvalidArgument("sqrt(5) needs 5 | N");
  // 2 cos(2 pi / 5) = (sqrt5 - 1) / 2
  long k = field->order() / 5;
  return Cyclotomic(1) + Cyclotomic(2) * (zeta(field, k) + zeta(field, -k));
}

bool Cyclotomic::is_zero() const {
  for (const auto& c : coeffs_)
    if (sgn(c) != 0) return false;
  return true;
}

bool Cyclotomic::is_rational() const {
  for (std::size_t i = 1; i < coeffs_.size(); ++i)
    if (sgn(coeffs_[i]) != 0) return false;
  return true;
}

void Cyclotomic::lift_to(const CyclotomicFieldPtr& field) {
  field_ = field;
  coeffs_.resize(field->degree(), Rational(0));
}

void Cyclotomic::adopt_field(const Cyclotomic& other) {
  if (!other.field_) return;
  if (!field_) {
    lift_to(other.field_);
    return;
  }
  if (field_->order() != other.field_->order())
    throw InvalidArgument("cyclotomic fields of different order");
}

Cyclotomic& Cyclotomic::operator+=(const Cyclotomic& o) {
  adopt_field(o);
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  return *this;
}

Cyclotomic& Cyclotomic::operator-=(const Cyclotomic& o) {
  adopt_field(o);
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  return *this;
}

Cyclotomic& Cyclotomic::operator*=(const Cyclotomic& o) {
  if (!o.field_) {
    for (auto& c : coeffs_) c *= o.coeffs_[0];
    return *this;
  }
  if (!field_) {
    Rational s = coeffs_[0];
    *this = o;
    for (auto& c : coeffs_) c *= s;
    return *this;
  }
  adopt_field(o);
  std::vector<Rational> prod(coeffs_.size() + o.coeffs_.size() - 1, Rational(0));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (sgn(coeffs_[i]) == 0) continue;
    for (std::size_t j = 0; j < o.coeffs_.size(); ++j)
      if (sgn(o.coeffs_[j]) != 0) prod[i + j] += coeffs_[i] * o.coeffs_[j];
  }
  coeffs_ = reduce(std::move(prod), field_->modulus());
  return *this;
}

Cyclotomic& Cyclotomic::operator/=(const Cyclotomic& o) { return *this *= o.inverse(); }

Cyclotomic operator-(const Cyclotomic& x) {
  Cyclotomic r = x;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

Cyclotomic Cyclotomic::inverse() const {
  if (is_zero()) throw DivisionByZero();
  if (!field_) return Cyclotomic(Rational(1) / coeffs_[0]);
  // Solve M y = e_0 where column j of M is x * zeta^j.
  const int n = field_->degree();
  std::vector<std::vector<Rational>> m(n, std::vector<Rational>(n + 1, Rational(0)));
  for (int j = 0; j < n; ++j) {
    Cyclotomic col = *this * zeta(field_, j);
    for (int i = 0; i < n; ++i) m[i][j] = col.coeffs_[i];
  }
  m[0][n] = 1;
  for (int c = 0; c < n; ++c) {
    int piv = c;
    while (sgn(m[piv][c]) == 0) ++piv;
    std::swap(m[piv], m[c]);
    Rational inv = Rational(1) / m[c][c];
    for (int k = c; k <= n; ++k) m[c][k] *= inv;
    for (int r = 0; r < n; ++r) {
      if (r == c || sgn(m[r][c]) == 0) continue;
      Rational f = m[r][c];
      for (int k = c; k <= n; ++k) m[r][k] -= f * m[c][k];
    }
  }
  std::vector<Rational> y(n);
  for (int i = 0; i < n; ++i) y[i] = m[i][n];
  return Cyclotomic(field_, std::move(y));
}

Cyclotomic Cyclotomic::pow(int exponent) const {
  if (exponent < 0) return inverse().pow(-exponent);
  Cyclotomic result(1);
  Cyclotomic base = *this;
  while (exponent > 0) {
    if (exponent & 1) result *= base;
    base *= base;
    exponent >>= 1;
  }
  return result;
}

Cyclotomic Cyclotomic::complex_conjugate() const {
  if (!field_) return *this;
  const int n = field_->order();
  std::vector<Rational> c(n, Rational(0));
  for (std::size_t k = 0; k < coeffs_.size(); ++k) c[(n - static_cast<int>(k)) % n] += coeffs_[k];
  return Cyclotomic(field_, std::move(c));
}

std::complex<double> Cyclotomic::to_complex() const {
  if (!field_) return {coeffs_[0].get_d(), 0.0};
  const double step = 2.0 * std::numbers::pi / field_->order();
  std::complex<double> z{0.0, 0.0};
  for (std::size_t k = 0; k < coeffs_.size(); ++k)
    if (sgn(coeffs_[k]) != 0) z += coeffs_[k].get_d() * std::polar(1.0, step * static_cast<double>(k));
  return z;
}

std::string Cyclotomic::to_string() const {
  std::ostringstream os;
  os << *this;
  return os.str();
}

bool operator==(const Cyclotomic& x, const Cyclotomic& y) {
  const std::size_t n = std::max(x.coeffs_.size(), y.coeffs_.size());
  if (x.field_ && y.field_ && x.field_->order() != y.field_->order()) return false;
  for (std::size_t i = 0; i < n; ++i) {
    const Rational zero(0);
    const Rational& a = i < x.coeffs_.size() ? x.coeffs_[i] : zero;
    const Rational& b = i < y.coeffs_.size() ? y.coeffs_[i] : zero;
    if (a != b) return false;
  }
  return true;
}

std::strong_ordering canonical_compare(const Cyclotomic& x, const Cyclotomic& y) {
  const std::size_t n = std::max(x.coeffs_.size(), y.coeffs_.size());
  const Rational zero(0);
  for (std::size_t i = 0; i < n; ++i) {
    const Rational& a = i < x.coeffs_.size() ? x.coeffs_[i] : zero;
    const Rational& b = i < y.coeffs_.size() ? y.coeffs_[i] : zero;
    int c = cmp(a, b);
    if (c != 0) return c < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
  }
  return std::strong_ordering::equal;
}

Cyclotomic to_cyclotomic(const Golden& x, const CyclotomicFieldPtr& field) {
  Cyclotomic r(x.rational_part());
  if (!x.is_rational()) r += Cyclotomic(x.sqrt5_part()) * Cyclotomic::sqrt5(field);
  return r;
}

std::ostream& operator<<(std::ostream& os, const Cyclotomic& x) {
  if (!x.field() || x.is_rational()) return os << x.coefficients()[0].get_str();
  bool first = true;
  const auto& c = x.coefficients();
  for (std::size_t k = 0; k < c.size(); ++k) {
    if (sgn(c[k]) == 0) continue;
    if (!first && sgn(c[k]) > 0) os << "+";
    os << c[k].get_str();
    if (k > 0) os << "*z" << x.field()->order() << "^" << k;
    first = false;
  }
  return os;
}

}  // namespace superflow
