#pragma once

// Sparse vectors and column-major sparse matrices over one exact field, with
// column-reduction routines for rank, kernel, image and dimension of sums.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <tuple>
#include <unordered_map>
#include <utility>
#include <vector>

#include "linksplit/field.hpp"

namespace linksplit {

using Index = std::uint32_t;

/// Sorted by index, no explicit zeros.
template <Field F>
struct SparseVector {
  std::vector<std::pair<Index, F>> entries;

  bool empty() const { return entries.empty(); }
  std::size_t size() const { return entries.size(); }

  F at(Index i) const {
    auto it = std::lower_bound(entries.begin(), entries.end(), i,
                               [](const auto& e, Index k) { return e.first < k; });
    return (it != entries.end() && it->first == i) ? it->second : F::zero();
  }

  /// this += factor * other
  void axpy(const F& factor, const SparseVector& other) {
    if (factor.is_zero() || other.empty()) return;
    std::vector<std::pair<Index, F>> out;
    out.reserve(entries.size() + other.entries.size());
    auto a = entries.begin();
    auto b = other.entries.begin();
    while (a != entries.end() || b != other.entries.end()) {
      if (b == other.entries.end() || (a != entries.end() && a->first < b->first)) {
        out.push_back(std::move(*a++));
      } else if (a == entries.end() || b->first < a->first) {
        out.emplace_back(b->first, factor * b->second);
        ++b;
      } else {
        F s = a->second + factor * b->second;
        if (!s.is_zero()) out.emplace_back(a->first, std::move(s));
        ++a;
        ++b;
      }
    }
    entries = std::move(out);
  }

  friend bool operator==(const SparseVector&, const SparseVector&) = default;
};

template <Field F>
class SparseMatrix {
 public:
  SparseMatrix() = default;
  SparseMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), columns_(cols) {}

  /// Duplicate (row, col) pairs are summed; zeros are dropped.
  static SparseMatrix from_triplets(std::size_t rows, std::size_t cols,
                                    std::vector<std::tuple<Index, Index, F>> triplets) {
    SparseMatrix m(rows, cols);
    std::sort(triplets.begin(), triplets.end(), [](const auto& x, const auto& y) {
      return std::tie(std::get<1>(x), std::get<0>(x)) < std::tie(std::get<1>(y), std::get<0>(y));
    });
    for (auto& [r, c, v] : triplets) {
      if (r >= rows || c >= cols) throw std::out_of_range("triplet outside matrix");
      auto& col = m.columns_[c].entries;
      if (!col.empty() && col.back().first == r) {
        col.back().second += v;
        if (col.back().second.is_zero()) col.pop_back();
      } else if (!v.is_zero()) {
        col.emplace_back(r, std::move(v));
      }
    }
    return m;
  }

  static SparseMatrix from_columns(std::size_t rows, std::vector<SparseVector<F>> cols) {
    SparseMatrix m;
    m.rows_ = rows;
    m.cols_ = cols.size();
    m.columns_ = std::move(cols);
    return m;
  }

  static SparseMatrix identity(std::size_t n) {
    SparseMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.columns_[i].entries.emplace_back(static_cast<Index>(i), F::one());
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const SparseVector<F>& column(std::size_t c) const { return columns_[c]; }
  SparseVector<F>& column(std::size_t c) { return columns_[c]; }
  const std::vector<SparseVector<F>>& columns() const { return columns_; }

  std::size_t nonzeros() const {
    std::size_t n = 0;
    for (const auto& c : columns_) n += c.size();
    return n;
  }

  F at(Index r, Index c) const { return columns_[c].at(r); }

  /// Sets one entry; a zero value removes it.
  void set(Index r, Index c, F value) {
    auto& e = columns_[c].entries;
    auto it = std::lower_bound(e.begin(), e.end(), r, [](const auto& x, Index k) { return x.first < k; });
    if (it != e.end() && it->first == r) {
      if (value.is_zero()) e.erase(it);
      else it->second = std::move(value);
    } else if (!value.is_zero()) {
      e.insert(it, {r, std::move(value)});
    }
  }

  SparseMatrix transpose() const {
    SparseMatrix t(cols_, rows_);
    for (std::size_t c = 0; c < cols_; ++c)
      for (const auto& [r, v] : columns_[c].entries) t.columns_[r].entries.emplace_back(static_cast<Index>(c), v);
    return t;
  }

  SparseVector<F> apply(const SparseVector<F>& x) const {
    SparseVector<F> y;
    for (const auto& [i, v] : x.entries) y.axpy(v, columns_[i]);
    return y;
  }

  friend SparseMatrix operator*(const SparseMatrix& a, const SparseMatrix& b) {
    if (a.cols_ != b.rows_) throw std::invalid_argument("dimension mismatch in product");
    SparseMatrix p(a.rows_, b.cols_);
    for (std::size_t c = 0; c < b.cols_; ++c) p.columns_[c] = a.apply(b.columns_[c]);
    return p;
  }

  friend SparseMatrix operator+(const SparseMatrix& a, const SparseMatrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw std::invalid_argument("dimension mismatch in sum");
    SparseMatrix s = a;
    for (std::size_t c = 0; c < a.cols_; ++c) s.columns_[c].axpy(F::one(), b.columns_[c]);
    return s;
  }

  friend SparseMatrix operator-(const SparseMatrix& a, const SparseMatrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw std::invalid_argument("dimension mismatch in difference");
    SparseMatrix s = a;
    for (std::size_t c = 0; c < a.cols_; ++c) s.columns_[c].axpy(-F::one(), b.columns_[c]);
    return s;
  }

  bool is_zero() const {
    return std::all_of(columns_.begin(), columns_.end(), [](const auto& c) { return c.empty(); });
  }

  friend bool operator==(const SparseMatrix&, const SparseMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<SparseVector<F>> columns_;
};

/// Result of reducing the columns of a matrix left to right.
template <Field F>
struct ColumnReduction {
  std::vector<SparseVector<F>> reduced;  // reduced[c] = M * ops[c]
  std::vector<SparseVector<F>> ops;      // tracked only when requested
  std::vector<bool> is_pivot;
  std::size_t rank = 0;
};

/// Standard lowest-pivot column reduction. Each column is cleared against the
/// earlier column owning its lowest nonzero row, so the output depends only on
/// the column order.
template <Field F>
ColumnReduction<F> reduce_columns(const SparseMatrix<F>& m, bool track_ops) {
  ColumnReduction<F> out;
  out.reduced = m.columns();
  out.is_pivot.assign(m.cols(), false);
  if (track_ops) {
    out.ops.resize(m.cols());
    for (std::size_t c = 0; c < m.cols(); ++c) out.ops[c].entries.emplace_back(static_cast<Index>(c), F::one());
  }
  std::unordered_map<Index, std::size_t> owner;  // lowest row -> pivot column
  owner.reserve(m.cols());
  for (std::size_t c = 0; c < m.cols(); ++c) {
    auto& col = out.reduced[c];
    while (!col.empty()) {
      const auto& low = col.entries.back();
      auto it = owner.find(low.first);
      if (it == owner.end()) break;
      const auto& piv = out.reduced[it->second];
      const F factor = -(low.second * piv.entries.back().second.inv());
      col.axpy(factor, piv);
      if (track_ops) out.ops[c].axpy(factor, out.ops[it->second]);
    }
    if (!col.empty()) {
      owner.emplace(col.entries.back().first, c);
      out.is_pivot[c] = true;
      ++out.rank;
    }
  }
  return out;
}

template <Field F>
std::size_t rank(const SparseMatrix<F>& m) {
  return reduce_columns(m, false).rank;
}

/// Basis of {v : M v = 0}; dim = cols - rank.
template <Field F>
std::vector<SparseVector<F>> kernel_basis(const SparseMatrix<F>& m) {
  auto red = reduce_columns(m, true);
  std::vector<SparseVector<F>> basis;
  for (std::size_t c = 0; c < m.cols(); ++c)
    if (!red.is_pivot[c]) basis.push_back(std::move(red.ops[c]));
  return basis;
}

/// Basis of the column space (the nonzero reduced columns).
template <Field F>
std::vector<SparseVector<F>> image_basis(const SparseMatrix<F>& m) {
  auto red = reduce_columns(m, false);
  std::vector<SparseVector<F>> basis;
  for (std::size_t c = 0; c < m.cols(); ++c)
    if (red.is_pivot[c]) basis.push_back(std::move(red.reduced[c]));
  return basis;
}

/// Dimension of the sum of the spans of several vector families in F^ambient.
template <Field F>
std::size_t span_dim(std::size_t ambient, std::span<const std::vector<SparseVector<F>>> families) {
  std::vector<SparseVector<F>> all;
  for (const auto& fam : families) all.insert(all.end(), fam.begin(), fam.end());
  return rank(SparseMatrix<F>::from_columns(ambient, std::move(all)));
}

template <Field F>
std::size_t span_dim(std::size_t ambient, std::initializer_list<std::vector<SparseVector<F>>> families) {
  return span_dim<F>(ambient, std::span<const std::vector<SparseVector<F>>>(families.begin(), families.size()));
}

}  // namespace linksplit
