#pragma once

#include <map>
#include <vector>

#include "superflow/errors.hpp"

namespace superflow {

template <class S>
using SparseRow = std::map<int, S>;

/// Exact reduced row echelon form, built one row at a time.
///
/// Every stored row has a leading 1 in its pivot column and zeros in all
/// other pivot columns, so the kernel can be read off directly.
template <class S>
class RrefBuilder {
 public:
  explicit RrefBuilder(int columns) : columns_(columns) {}

  int columns() const { return columns_; }
  int rank() const { return static_cast<int>(pivots_.size()); }
  const std::map<int, SparseRow<S>>& pivots() const { return pivots_; }

  /// Returns true when the row was independent of those seen so far.
  bool add_row(SparseRow<S> row) {
    for (auto it = row.begin(); it != row.end();) {
      if (it->second.is_zero()) it = row.erase(it);
      else ++it;
    }
    // Pivot rows only hold non-pivot columns besides their own, so one sweep
    // over the pivot columns present in row suffices.
    std::vector<int> hits;
    for (const auto& [c, v] : row)
      if (pivots_.count(c)) hits.push_back(c);
    for (int c : hits) {
      auto f_it = row.find(c);
      if (f_it == row.end()) continue;
      S f = f_it->second;
      for (const auto& [k, v] : pivots_.at(c)) axpy(row, k, -(f * v));
    }
    if (row.empty()) return false;
    const int lead = row.begin()->first;
    if (lead < 0 || lead >= columns_) throw InvalidArgument("row column out of range");
    S inv = row.begin()->second.inverse();
    for (auto& [k, v] : row) v *= inv;
    for (auto& [pc, prow] : pivots_) {
      auto f_it = prow.find(lead);
      if (f_it == prow.end()) continue;
      S f = f_it->second;
      for (const auto& [k, v] : row) axpy(prow, k, -(f * v));
    }
    pivots_.emplace(lead, std::move(row));
    return true;
  }

  /// Basis of the null space, one dense vector per free column.
  std::vector<std::vector<S>> kernel() const {
    std::vector<std::vector<S>> basis;
    for (int f = 0; f < columns_; ++f) {
      if (pivots_.count(f)) continue;
      std::vector<S> v(columns_, S(0));
      v[f] = S(1);
      for (const auto& [pc, prow] : pivots_) {
        auto it = prow.find(f);
        if (it != prow.end()) v[pc] = -it->second;
      }
      basis.push_back(std::move(v));
    }
    return basis;
  }

 private:
  static void axpy(SparseRow<S>& row, int k, const S& v) {
    auto [it, inserted] = row.try_emplace(k, v);
    if (!inserted) {
      it->second += v;
      if (it->second.is_zero()) row.erase(it);
    } else if (it->second.is_zero()) {
      row.erase(it);
    }
  }

  int columns_;
  std::map<int, SparseRow<S>> pivots_;
};

template <class S>
std::vector<std::vector<S>> exact_kernel(const std::vector<SparseRow<S>>& rows, int columns) {
  RrefBuilder<S> b(columns);
  for (const auto& r : rows) b.add_row(r);
  return b.kernel();
}

}  // namespace superflow
