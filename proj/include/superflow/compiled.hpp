#pragma once

#include <cmath>
#include <vector>

#include "superflow/errors.hpp"
#include "superflow/ratvf.hpp"
#include "superflow/scalar.hpp"

namespace superflow {

/// Double-precision snapshot of a real polynomial for fast repeated evaluation.
class CompiledPoly {
 public:
  CompiledPoly() = default;
  template <class S>
  explicit CompiledPoly(const MultiPoly<S>& p) : vars_(p.num_vars()) {
    for (const auto& [e, c] : p.terms()) {
      coeffs_.push_back(ScalarTraits<S>::to_complex(c).real());
      exps_.insert(exps_.end(), e.begin(), e.end());
      for (int k : e) max_exp_ = std::max(max_exp_, k);
    }
    if (vars_ > 8 || max_exp_ > 15) throw InvalidArgument("compiled polynomial limited to 8 variables, degree 15");
  }

  double operator()(const double* x) const {
    double powers[8][16];
    const int m = max_exp_;
    for (int i = 0; i < vars_; ++i) {
      powers[i][0] = 1.0;
      for (int k = 1; k <= m; ++k) powers[i][k] = powers[i][k - 1] * x[i];
    }
    double acc = 0.0;
    for (std::size_t t = 0; t < coeffs_.size(); ++t) {
      double v = coeffs_[t];
      const int* e = &exps_[t * vars_];
      for (int i = 0; i < vars_; ++i) v *= powers[i][e[i]];
      acc += v;
    }
    return acc;
  }

  int num_vars() const { return vars_; }

 private:
  int vars_ = 0;
  int max_exp_ = 0;
  std::vector<double> coeffs_;
  std::vector<int> exps_;
};

/// Double-precision snapshot of a rational vector field N / D.
class CompiledField {
 public:
  CompiledField() = default;
  template <class S>
  explicit CompiledField(const RationalVF<S>& v) : den_(v.denominator()) {
    for (const auto& n : v.numerators()) nums_.emplace_back(n);
  }

  int dim() const { return static_cast<int>(nums_.size()); }

  /// Writes V(x) into out; returns the denominator value.
  double eval(const double* x, double* out) const {
    const double d = den_(x);
    for (std::size_t i = 0; i < nums_.size(); ++i) out[i] = nums_[i](x) / d;
    return d;
  }

  std::vector<double> operator()(const std::vector<double>& x) const {
    std::vector<double> out(nums_.size());
    eval(x.data(), out.data());
    return out;
  }

  const CompiledPoly& denominator() const { return den_; }

 private:
  std::vector<CompiledPoly> nums_;
  CompiledPoly den_;
};

}  // namespace superflow
