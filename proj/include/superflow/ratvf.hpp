#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "superflow/multipoly.hpp"

namespace superflow {

/// num / den, returned unreduced apart from making den's leading coefficient 1.
template <class S>
struct RationalFunction {
  MultiPoly<S> num;
  MultiPoly<S> den;

  bool is_zero() const { return num.is_zero(); }
};

/// A vector of n rational functions sharing one denominator.
template <class S>
class RationalVF {
 public:
  RationalVF() = default;
  /// With check_homogeneity, every numerator must be homogeneous of degree
  /// deg(den) + 2 (zero numerators allowed) and den homogeneous.
  RationalVF(std::vector<MultiPoly<S>> numerators, MultiPoly<S> denominator, bool check_homogeneity = true);
  /// Polynomial field, denominator 1.
  static RationalVF polynomial(std::vector<MultiPoly<S>> numerators, bool check_homogeneity = true);

  int dim() const { return static_cast<int>(num_.size()); }
  const VarList& vars() const { return den_.vars(); }
  const std::vector<MultiPoly<S>>& numerators() const { return num_; }
  const MultiPoly<S>& numerator(int i) const { return num_.at(i); }
  const MultiPoly<S>& denominator() const { return den_; }
  int denominator_degree() const { return den_.degree(); }

  bool is_zero() const;
  bool is_two_homogeneous() const;

  std::vector<std::complex<double>> evaluate_complex(const std::vector<std::complex<double>>& x) const;
  std::vector<double> evaluate_double(const std::vector<double>& x) const;
  std::vector<S> evaluate(const std::vector<S>& x) const;

  RationalVF scaled(const S& c) const;
  /// Divides through so the first nonzero numerator's leading coefficient is 1.
  RationalVF normalized() const;

  std::string to_string() const;

 private:
  std::vector<MultiPoly<S>> num_;
  MultiPoly<S> den_;
};

template <class S>
RationalFunction<S> divergence(const RationalVF<S>& v);

template <class S>
std::array<RationalFunction<S>, 3> curl(const RationalVF<S>& v);

/// g^-1 V(g x).
template <class S>
RationalVF<S> conjugation_action(const RationalVF<S>& v, const ExactMatrix<S>& g);

/// Equality as rational maps (cross-multiplied).
template <class S>
bool fields_equal(const RationalVF<S>& a, const RationalVF<S>& b);

/// Nonzero c with a = c b, if one exists.
template <class S>
std::optional<S> proportionality_factor(const RationalVF<S>& a, const RationalVF<S>& b);

/// sum_i (dF/dx_i) V_i, numerator only: zero iff F is a first integral.
template <class S>
MultiPoly<S> lie_derivative_numerator(const MultiPoly<S>& f, const RationalVF<S>& v);

/// Unique q with p = q d, if d divides p exactly.
template <class S>
std::optional<MultiPoly<S>> exact_divide(const MultiPoly<S>& p, const MultiPoly<S>& d);

RationalVF<Cyclotomic> to_cyclotomic(const RationalVF<Golden>& v, const CyclotomicFieldPtr& field);
RationalVF<Golden> golden_conjugate(const RationalVF<Golden>& v);

extern template class RationalVF<Golden>;
extern template class RationalVF<Cyclotomic>;

}  // namespace superflow
