#pragma once

#include <Eigen/Core>

#include "superflow/scalar.hpp"

namespace superflow {

template <class S>
using ExactMatrix = Eigen::Matrix<S, Eigen::Dynamic, Eigen::Dynamic>;

template <class S>
using ExactVector = Eigen::Matrix<S, Eigen::Dynamic, 1>;

/// Structural (entrywise canonical) ordering; used to key group elements.
template <class S>
std::strong_ordering compare_matrices(const ExactMatrix<S>& a, const ExactMatrix<S>& b) {
  if (a.rows() != b.rows()) return a.rows() <=> b.rows();
  if (a.cols() != b.cols()) return a.cols() <=> b.cols();
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      auto c = canonical_compare(a(i, j), b(i, j));
      if (c != 0) return c;
    }
  return std::strong_ordering::equal;
}

template <class S>
struct MatrixLess {
  bool operator()(const ExactMatrix<S>& a, const ExactMatrix<S>& b) const {
    return compare_matrices(a, b) < 0;
  }
};

template <class S>
bool matrices_equal(const ExactMatrix<S>& a, const ExactMatrix<S>& b) {
  return compare_matrices(a, b) == 0;
}

/// Exact Gauss-Jordan inverse. Throws SingularMatrix.
template <class S>
ExactMatrix<S> exact_inverse(const ExactMatrix<S>& m);

template <class S>
bool is_identity(const ExactMatrix<S>& m);

/// M^T M = I exactly (real orthogonality, no conjugation).
template <class S>
bool is_orthogonal(const ExactMatrix<S>& m);

/// M^H M = I exactly with entrywise complex conjugation.
template <class S>
bool is_unitary(const ExactMatrix<S>& m);

template <class S>
Eigen::MatrixXcd to_complex_matrix(const ExactMatrix<S>& m);

template <class S>
Eigen::MatrixXd to_double_matrix(const ExactMatrix<S>& m);

/// Entrywise conversion of a golden matrix into a cyclotomic field.
ExactMatrix<Cyclotomic> to_cyclotomic(const ExactMatrix<Golden>& m, const CyclotomicFieldPtr& field);

extern template ExactMatrix<Golden> exact_inverse(const ExactMatrix<Golden>&);
extern template ExactMatrix<Cyclotomic> exact_inverse(const ExactMatrix<Cyclotomic>&);
extern template bool is_identity(const ExactMatrix<Golden>&);
extern template bool is_identity(const ExactMatrix<Cyclotomic>&);
extern template bool is_orthogonal(const ExactMatrix<Golden>&);
extern template bool is_orthogonal(const ExactMatrix<Cyclotomic>&);
extern template bool is_unitary(const ExactMatrix<Golden>&);
extern template bool is_unitary(const ExactMatrix<Cyclotomic>&);
extern template Eigen::MatrixXcd to_complex_matrix(const ExactMatrix<Golden>&);
extern template Eigen::MatrixXcd to_complex_matrix(const ExactMatrix<Cyclotomic>&);
extern template Eigen::MatrixXd to_double_matrix(const ExactMatrix<Golden>&);
extern template Eigen::MatrixXd to_double_matrix(const ExactMatrix<Cyclotomic>&);

}  // namespace superflow
