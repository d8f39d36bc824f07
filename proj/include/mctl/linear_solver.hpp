#pragma once

// Exact sparse Gauss-Jordan elimination for nullspaces over a field.

#include <algorithm>
#include <cstddef>
#include <limits>
#include <map>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

namespace mctl {

/// Field elements: +, -, *, /, is_zero(), complexity(). One() is taken from a pivot divided by itself.
template <class F>
class SparseNullspace {
 public:
  using Row = std::map<int, F>;

  /// `deferred` is pivoted on only when a row has no other entry, so it tends to stay free.
  explicit SparseNullspace(int columns, std::optional<int> deferred = std::nullopt)
      : columns_(columns), deferred_(deferred) {}

  int columns() const { return columns_; }
  std::size_t rank() const { return rows_.size(); }

  /// Adds the equation sum_j row[j] * v_j = 0.
  void add_equation(Row row) {
    for (auto it = row.begin(); it != row.end();) {
      if (it->first < 0 || it->first >= columns_) throw std::out_of_range("column out of range");
      it = it->second.is_zero() ? row.erase(it) : std::next(it);
    }
    // Rows are fully reduced, so one pass over the pivot columns clears them.
    for (std::size_t r = 0; r < rows_.size() && !row.empty(); ++r) {
      auto it = row.find(pivot_[r]);
      if (it == row.end()) continue;
      F factor = it->second;
      axpy(row, rows_[r], factor);
    }
    if (row.empty()) return;

    int pivot = -1;
    std::size_t best = std::numeric_limits<std::size_t>::max();
    for (const auto& [col, val] : row) {
      if (deferred_ && col == *deferred_ && row.size() > 1) continue;
      std::size_t c = val.complexity();
      if (c < best) {
        best = c;
        pivot = col;
      }
    }
    const F inv_den = row.at(pivot);
    for (auto& [col, val] : row) val = val / inv_den;
    for (auto& other : rows_) {
      auto it = other.find(pivot);
      if (it == other.end()) continue;
      F factor = it->second;
      axpy(other, row, factor);
    }
    rows_.push_back(std::move(row));
    pivot_.push_back(pivot);
  }

  /// One basis vector per free column f, with v_f = 1 and other free coordinates 0.
  std::vector<Row> nullspace(const F& one) const {
    std::vector<char> is_pivot(static_cast<std::size_t>(columns_), 0);
    for (int p : pivot_) is_pivot[p] = 1;
    std::vector<Row> out;
    for (int f = 0; f < columns_; ++f) {
      if (is_pivot[f]) continue;
      Row v;
      v.emplace(f, one);
      for (std::size_t r = 0; r < rows_.size(); ++r) {
        auto it = rows_[r].find(f);
        if (it != rows_[r].end()) v.emplace(pivot_[r], -it->second);
      }
      out.push_back(std::move(v));
    }
    return out;
  }

 private:
  // target -= factor * source
  static void axpy(Row& target, const Row& source, const F& factor) {
    for (const auto& [col, val] : source) {
      F delta = factor * val;
      auto [it, inserted] = target.try_emplace(col, -delta);
      if (inserted) continue;
      it->second = it->second - delta;
      if (it->second.is_zero()) target.erase(it);
    }
  }

  int columns_;
  std::optional<int> deferred_;
  std::vector<Row> rows_;
  std::vector<int> pivot_;
};

}  // namespace mctl
