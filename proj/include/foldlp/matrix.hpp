// foldlp/matrix.hpp
//
// Rational matrices with abstract row and column index sets.  A Matrix<R, I>
// is a total map on row_set x col_set; extracting a row yields a Vec<I> over
// the column set.

#ifndef FOLDLP_MATRIX_HPP
#define FOLDLP_MATRIX_HPP

#include <algorithm>
#include <stdexcept>
#include <utility>
#include <vector>

#include "foldlp/rational.hpp"
#include "foldlp/vec.hpp"

namespace foldlp {

template <typename R, typename I>
class Matrix {
 public:
  Matrix() = default;

  // All rows must share the same column index set.
  explicit Matrix(std::vector<std::pair<R, Vec<I>>> rows) : rows_(std::move(rows)) {
    std::sort(rows_.begin(), rows_.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    for (std::size_t i = 1; i < rows_.size(); ++i) {
      if (!(rows_[i - 1].first < rows_[i].first))
        throw std::invalid_argument("Matrix: duplicate row index");
      if (!rows_[i].second.same_index_set(rows_[0].second))
        throw std::invalid_argument("Matrix: rows over different column sets");
    }
  }

  static Matrix zero(const std::vector<R>& row_ids, const std::vector<I>& cols) {
    std::vector<std::pair<R, Vec<I>>> rows;
    rows.reserve(row_ids.size());
    for (const R& r : row_ids) rows.emplace_back(r, Vec<I>::zero(cols));
    return Matrix(std::move(rows));
  }

  std::size_t row_count() const { return rows_.size(); }

  std::vector<R> row_ids() const {
    std::vector<R> out;
    out.reserve(rows_.size());
    for (const auto& r : rows_) out.push_back(r.first);
    return out;
  }

  std::vector<I> col_ids() const {
    if (rows_.empty()) return {};
    return rows_[0].second.indices();
  }

  const Vec<I>& row(const R& r) const {
    auto it = std::lower_bound(
        rows_.begin(), rows_.end(), r,
        [](const auto& e, const R& key) { return e.first < key; });
    if (it == rows_.end() || (r < it->first))
      throw std::invalid_argument("Matrix: row not present");
    return it->second;
  }

  const Rational& entry(const R& r, const I& c) const { return row(r)[c]; }

  void set(const R& r, const I& c, Rational v) {
    auto it = std::lower_bound(
        rows_.begin(), rows_.end(), r,
        [](const auto& e, const R& key) { return e.first < key; });
    if (it == rows_.end() || (r < it->first))
      throw std::invalid_argument("Matrix: row not present");
    it->second.set(c, std::move(v));
  }

  auto begin() const { return rows_.begin(); }
  auto end() const { return rows_.end(); }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_;
  }
  friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

 private:
  std::vector<std::pair<R, Vec<I>>> rows_;  // sorted by row index
};

// A * x, one exact inner product per row.
template <typename R, typename I>
Vec<R> mat_vec(const Matrix<R, I>& m, const Vec<I>& x) {
  std::vector<std::pair<R, Rational>> out;
  for (const auto& r : m) out.emplace_back(r.first, dot(r.second, x));
  return Vec<R>(std::move(out));
}

}  // namespace foldlp

#endif  // FOLDLP_MATRIX_HPP
