#pragma once

#include <complex>
#include <compare>

#include <Eigen/Core>

#include "superflow/cyclotomic.hpp"
#include "superflow/golden.hpp"

namespace Eigen {

template <>
struct NumTraits<superflow::Golden> : GenericNumTraits<superflow::Golden> {
  using Real = superflow::Golden;
  using NonInteger = superflow::Golden;
  using Nested = superflow::Golden;
  using Literal = superflow::Golden;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 8,
    AddCost = 16,
    MulCost = 32
  };
  static inline Real epsilon() { return Real(0); }
  static inline Real dummy_precision() { return Real(0); }
  static inline int digits10() { return 0; }
};

template <>
struct NumTraits<superflow::Cyclotomic> : GenericNumTraits<superflow::Cyclotomic> {
  using Real = superflow::Cyclotomic;
  using NonInteger = superflow::Cyclotomic;
  using Nested = superflow::Cyclotomic;
  using Literal = superflow::Cyclotomic;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 16,
    AddCost = 32,
    MulCost = 128
  };
  static inline Real epsilon() { return Real(0); }
  static inline Real dummy_precision() { return Real(0); }
  static inline int digits10() { return 0; }
};

}  // namespace Eigen

namespace superflow {

/// Uniform access to the two exact scalar domains.
template <class S>
struct ScalarTraits;

template <>
struct ScalarTraits<Golden> {
  static constexpr const char* name = "golden";
  static std::complex<double> to_complex(const Golden& x) { return {x.to_double(), 0.0}; }
  static Golden complex_conjugate(const Golden& x) { return x; }
};

template <>
struct ScalarTraits<Cyclotomic> {
  static constexpr const char* name = "cyclotomic";
  static std::complex<double> to_complex(const Cyclotomic& x) { return x.to_complex(); }
  static Cyclotomic complex_conjugate(const Cyclotomic& x) { return x.complex_conjugate(); }
};

template <class S>
struct CanonicalLess {
  bool operator()(const S& a, const S& b) const { return canonical_compare(a, b) < 0; }
};

}  // namespace superflow
