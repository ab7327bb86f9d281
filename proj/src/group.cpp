#include "superflow/group.hpp"

#include <deque>

#include "superflow/errors.hpp"

namespace superflow {

template <class S>
bool MatrixGroup<S>::contains(const ExactMatrix<S>& m) const {
  for (const auto& e : elements)
    if (matrices_equal<S>(e, m)) return true;
  return false;
}

template <class S>
MatrixGroup<S> generate_group(const std::vector<ExactMatrix<S>>& generators, int cap, std::string tag) {
  if (generators.empty()) throw InvalidArgument("generate_group needs at least one generator");
  const Eigen::Index n = generators.front().rows();
  for (const auto& g : generators) {
    if (g.rows() != n || g.cols() != n) throw DimensionMismatch("generators differ in size");
    if (determinant<S>(g).is_zero()) throw SingularMatrix("generator is not invertible");
  }
  MatrixGroup<S> group;
  group.generators = generators;
  group.tag = std::move(tag);
  std::set<ExactMatrix<S>, MatrixLess<S>> seen;
  std::deque<ExactMatrix<S>> queue;
  ExactMatrix<S> id = ExactMatrix<S>::Identity(n, n);
  seen.insert(id);
  group.elements.push_back(id);
  queue.push_back(id);
  while (!queue.empty()) {
    ExactMatrix<S> cur = std::move(queue.front());
    queue.pop_front();
    for (const auto& g : generators) {
      ExactMatrix<S> next = cur * g;
      if (seen.insert(next).second) {
        if (static_cast<int>(seen.size()) > cap)
          throw GroupNotFinite("group closure exceeds cap " + std::to_string(cap));
        group.elements.push_back(next);
        queue.push_back(std::move(next));
      }
    }
  }
  return group;
}

template <class S>
bool contains_minus_identity(const MatrixGroup<S>& g) {
  if (g.elements.empty()) return false;
  const Eigen::Index n = g.dim();
  ExactMatrix<S> m = ExactMatrix<S>::Identity(n, n);
  m = -m;
  return g.contains(m);
}

template <class S>
MatrixGroup<S> conjugate_group(const MatrixGroup<S>& g, const ExactMatrix<S>& s) {
  ExactMatrix<S> sinv = exact_inverse<S>(s);
  MatrixGroup<S> out;
  out.tag = g.tag;
  for (const auto& e : g.elements) out.elements.push_back(s * e * sinv);
  for (const auto& e : g.generators) out.generators.push_back(s * e * sinv);
  return out;
}

template <class S>
S determinant(const ExactMatrix<S>& m) {
  if (m.rows() != m.cols()) throw DimensionMismatch("determinant of a non-square matrix");
  const Eigen::Index n = m.rows();
  ExactMatrix<S> a = m;
  S det(1);
  for (Eigen::Index c = 0; c < n; ++c) {
    Eigen::Index piv = c;
    while (piv < n && a(piv, c).is_zero()) ++piv;
    if (piv == n) return S(0);
    if (piv != c) {
      a.row(piv).swap(a.row(c));
      det = -det;
    }
    det *= a(c, c);
    S inv = a(c, c).inverse();
    for (Eigen::Index r = c + 1; r < n; ++r) {
      if (a(r, c).is_zero()) continue;
      S f = a(r, c) * inv;
      for (Eigen::Index k = c; k < n; ++k) a(r, k) -= f * a(c, k);
    }
  }
  return det;
}

template <class S>
int rotation_subgroup_order(const MatrixGroup<S>& g) {
  int count = 0;
  for (const auto& e : g.elements)
    if (determinant<S>(e) == S(1)) ++count;
  return count;
}

template struct MatrixGroup<Golden>;
template struct MatrixGroup<Cyclotomic>;
template MatrixGroup<Golden> generate_group(const std::vector<ExactMatrix<Golden>>&, int, std::string);
template MatrixGroup<Cyclotomic> generate_group(const std::vector<ExactMatrix<Cyclotomic>>&, int, std::string);
template bool contains_minus_identity(const MatrixGroup<Golden>&);
template bool contains_minus_identity(const MatrixGroup<Cyclotomic>&);
template MatrixGroup<Golden> conjugate_group(const MatrixGroup<Golden>&, const ExactMatrix<Golden>&);
template MatrixGroup<Cyclotomic> conjugate_group(const MatrixGroup<Cyclotomic>&, const ExactMatrix<Cyclotomic>&);
template Golden determinant(const ExactMatrix<Golden>&);
template Cyclotomic determinant(const ExactMatrix<Cyclotomic>&);
template int rotation_subgroup_order(const MatrixGroup<Golden>&);
template int rotation_subgroup_order(const MatrixGroup<Cyclotomic>&);

}  // namespace superflow
