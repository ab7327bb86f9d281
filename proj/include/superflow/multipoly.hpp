#pragma once

#include <complex>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "superflow/matrix.hpp"

namespace superflow {

using VarList = std::shared_ptr<const std::vector<std::string>>;

VarList make_vars(std::vector<std::string> names);
/// x1, ..., xn
VarList indexed_vars(int n, const std::string& stem = "x");
/// x, y, z
VarList xyz_vars();

/// Multivariate polynomial with exact coefficients.
///
/// Exponent vectors are dense over the variable list. Terms live in a
/// std::map, so the term order (and structural equality) is canonical and no
/// zero coefficient is ever stored.
template <class S>
class MultiPoly {
 public:
  using Scalar = S;
  using Exponent = std::vector<int>;
  using TermMap = std::map<Exponent, S>;

  /// The zero polynomial with no variables; adopts the variables of whatever
  /// it is combined with.
  MultiPoly() = default;
  explicit MultiPoly(VarList vars);
  MultiPoly(VarList vars, TermMap terms);

  static MultiPoly constant(VarList vars, const S& c);
  static MultiPoly variable(VarList vars, int index);
  static MultiPoly monomial(VarList vars, Exponent e, const S& c);
  static std::vector<MultiPoly> generators(const VarList& vars);

  const VarList& vars() const { return vars_; }
  int num_vars() const { return vars_ ? static_cast<int>(vars_->size()) : 0; }
  const TermMap& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  /// Total degree; -1 for the zero polynomial.
  int degree() const;
  int degree_in(int var) const;
  /// True for the zero polynomial.
  bool is_homogeneous(int degree) const;
  /// The common degree of every term, or -1 for zero / inhomogeneous.
  int homogeneous_degree() const;

  S coefficient(const Exponent& e) const;
  S constant_term() const;

  MultiPoly& operator+=(const MultiPoly& o);
  MultiPoly& operator-=(const MultiPoly& o);
  MultiPoly& operator*=(const MultiPoly& o);
  MultiPoly& operator*=(const S& c);

  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) { return a.multiply(b); }
  friend MultiPoly operator*(MultiPoly a, const S& c) { return a *= c; }
  friend MultiPoly operator*(const S& c, MultiPoly a) { return a *= c; }
  friend MultiPoly operator-(const MultiPoly& a) {
    MultiPoly r = a;
    for (auto& [e, c] : r.terms_) c = -c;
    return r;
  }
  friend bool operator==(const MultiPoly& a, const MultiPoly& b) { return a.equals(b); }

  MultiPoly pow(int exponent) const;
  MultiPoly derivative(int var) const;

  S evaluate(const std::vector<S>& point) const;
  std::complex<double> evaluate_complex(const std::vector<std::complex<double>>& point) const;
  /// Real part of the complex evaluation; for polynomials with real coefficients.
  double evaluate_double(const std::vector<double>& point) const;

  /// p(images[0], ..., images[n-1]); the result lives in the images' ring.
  MultiPoly substitute(const std::vector<MultiPoly>& images) const;
  /// p(M x), expanded.
  MultiPoly compose_linear(const ExactMatrix<S>& m) const;
  /// Same terms over a different (equal-length) variable list.
  MultiPoly with_vars(VarList vars) const;
  /// Embeds into a ring with more variables; old variable i goes to slot map[i].
  MultiPoly embed(VarList vars, const std::vector<int>& slot) const;

  /// Coefficient-wise image under f : S -> S.
  template <class F>
  MultiPoly map_coefficients(F f) const {
    TermMap out;
    for (const auto& [e, c] : terms_) {
      S v = f(c);
      if (!v.is_zero()) out.emplace(e, std::move(v));
    }
    return MultiPoly(vars_, std::move(out));
  }

  /// The coefficient of the greatest exponent in the canonical order.
  S leading_coefficient() const;

  std::string to_string() const;

 private:
  MultiPoly multiply(const MultiPoly& o) const;
  bool equals(const MultiPoly& o) const;
  void adopt(const MultiPoly& o);
  void add_term(const Exponent& e, const S& c);

  VarList vars_;
  TermMap terms_;
};

/// Converts a golden polynomial into a cyclotomic one; sqrt5 needs 5 | N.
MultiPoly<Cyclotomic> to_cyclotomic(const MultiPoly<Golden>& p, const CyclotomicFieldPtr& field);

/// Applies golden_conjugate to every coefficient.
MultiPoly<Golden> golden_conjugate(const MultiPoly<Golden>& p);

extern template class MultiPoly<Golden>;
extern template class MultiPoly<Cyclotomic>;

}  // namespace superflow
