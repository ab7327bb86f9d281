#pragma once

#include <set>
#include <string>
#include <vector>

#include "superflow/matrix.hpp"

namespace superflow {

/// A finite matrix group with its generators. Elements are kept in
/// breadth-first discovery order starting from the identity.
template <class S>
struct MatrixGroup {
  std::vector<ExactMatrix<S>> elements;
  std::vector<ExactMatrix<S>> generators;
  std::string tag;

  int order() const { return static_cast<int>(elements.size()); }
  int dim() const { return elements.empty() ? 0 : static_cast<int>(elements.front().rows()); }
  bool contains(const ExactMatrix<S>& m) const;
  std::set<ExactMatrix<S>, MatrixLess<S>> element_set() const {
    return {elements.begin(), elements.end()};
  }
};

constexpr int kDefaultGroupCap = 400;

/// Breadth-first closure under right multiplication by generators.
/// Throws GroupNotFinite when more than cap elements appear.
template <class S>
MatrixGroup<S> generate_group(const std::vector<ExactMatrix<S>>& generators, int cap = kDefaultGroupCap,
                              std::string tag = "");

template <class S>
bool contains_minus_identity(const MatrixGroup<S>& g);

/// { s g s^-1 : g in G }, generators conjugated alongside.
template <class S>
MatrixGroup<S> conjugate_group(const MatrixGroup<S>& g, const ExactMatrix<S>& s);

template <class S>
S determinant(const ExactMatrix<S>& m);

/// Number of elements with determinant 1.
template <class S>
int rotation_subgroup_order(const MatrixGroup<S>& g);

extern template struct MatrixGroup<Golden>;
extern template struct MatrixGroup<Cyclotomic>;
extern template MatrixGroup<Golden> generate_group(const std::vector<ExactMatrix<Golden>>&, int, std::string);
extern template MatrixGroup<Cyclotomic> generate_group(const std::vector<ExactMatrix<Cyclotomic>>&, int, std::string);
extern template bool contains_minus_identity(const MatrixGroup<Golden>&);
extern template bool contains_minus_identity(const MatrixGroup<Cyclotomic>&);
extern template MatrixGroup<Golden> conjugate_group(const MatrixGroup<Golden>&, const ExactMatrix<Golden>&);
extern template MatrixGroup<Cyclotomic> conjugate_group(const MatrixGroup<Cyclotomic>&, const ExactMatrix<Cyclotomic>&);
extern template Golden determinant(const ExactMatrix<Golden>&);
extern template Cyclotomic determinant(const ExactMatrix<Cyclotomic>&);
extern template int rotation_subgroup_order(const MatrixGroup<Golden>&);
extern template int rotation_subgroup_order(const MatrixGroup<Cyclotomic>&);

}  // namespace superflow
