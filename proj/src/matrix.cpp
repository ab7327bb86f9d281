#include "superflow/matrix.hpp"

#include <utility>

#include "superflow/errors.hpp"

namespace superflow {

template <class S>
ExactMatrix<S> exact_inverse(const ExactMatrix<S>& m) {
  if (m.rows() != m.cols()) throw DimensionMismatch("inverse of a non-square matrix");
  const Eigen::Index n = m.rows();
  ExactMatrix<S> a = m;
  ExactMatrix<S> inv = ExactMatrix<S>::Identity(n, n);
  for (Eigen::Index c = 0; c < n; ++c) {
    Eigen::Index piv = c;
    while (piv < n && a(piv, c).is_zero()) ++piv;
    if (piv == n) throw SingularMatrix("matrix is singular");
    if (piv != c) {
      a.row(piv).swap(a.row(c));
      inv.row(piv).swap(inv.row(c));
    }
    S s = a(c, c).inverse();
    for (Eigen::Index k = 0; k < n; ++k) {
      a(c, k) *= s;
      inv(c, k) *= s;
    }
    for (Eigen::Index r = 0; r < n; ++r) {
      if (r == c || a(r, c).is_zero()) continue;
      S f = a(r, c);
      for (Eigen::Index k = 0; k < n; ++k) {
        a(r, k) -= f * a(c, k);
        inv(r, k) -= f * inv(c, k);
      }
    }
  }
  return inv;
}

template <class S>
bool is_identity(const ExactMatrix<S>& m) {
  if (m.rows() != m.cols()) return false;
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j)
      if (!(m(i, j) == S(i == j ? 1 : 0))) return false;
  return true;
}

template <class S>
bool is_orthogonal(const ExactMatrix<S>& m) {
  ExactMatrix<S> p = m.transpose() * m;
  return is_identity<S>(p);
}

template <class S>
bool is_unitary(const ExactMatrix<S>& m) {
  ExactMatrix<S> h = m.transpose().unaryExpr([](const S& x) { return ScalarTraits<S>::complex_conjugate(x); });
  ExactMatrix<S> p = h * m;
  return is_identity<S>(p);
}

template <class S>
Eigen::MatrixXcd to_complex_matrix(const ExactMatrix<S>& m) {
  Eigen::MatrixXcd r(m.rows(), m.cols());
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j) r(i, j) = ScalarTraits<S>::to_complex(m(i, j));
  return r;
}

template <class S>
Eigen::MatrixXd to_double_matrix(const ExactMatrix<S>& m) {
  Eigen::MatrixXd r(m.rows(), m.cols());
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      auto z = ScalarTraits<S>::to_complex(m(i, j));
      if (z.imag() != 0.0 && std::abs(z.imag()) > 1e-12 * (1.0 + std::abs(z.real())))
        throw InvalidArgument("matrix entry is not real");
      r(i, j) = z.real();
    }
  return r;
}

ExactMatrix<Cyclotomic> to_cyclotomic(const ExactMatrix<Golden>& m, const CyclotomicFieldPtr& field) {
  ExactMatrix<Cyclotomic> r(m.rows(), m.cols());
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j) r(i, j) = to_cyclotomic(m(i, j), field);
  return r;
}

template ExactMatrix<Golden> exact_inverse(const ExactMatrix<Golden>&);
template ExactMatrix<Cyclotomic> exact_inverse(const ExactMatrix<Cyclotomic>&);
template bool is_identity(const ExactMatrix<Golden>&);
template bool is_identity(const ExactMatrix<Cyclotomic>&);
template bool is_orthogonal(const ExactMatrix<Golden>&);
template bool is_orthogonal(const ExactMatrix<Cyclotomic>&);
template bool is_unitary(const ExactMatrix<Golden>&);
template bool is_unitary(const ExactMatrix<Cyclotomic>&);
template Eigen::MatrixXcd to_complex_matrix(const ExactMatrix<Golden>&);
template Eigen::MatrixXcd to_complex_matrix(const ExactMatrix<Cyclotomic>&);
template Eigen::MatrixXd to_double_matrix(const ExactMatrix<Golden>&);
template Eigen::MatrixXd to_double_matrix(const ExactMatrix<Cyclotomic>&);

}  // namespace superflow
