#pragma once

// Gaussian elimination of a chain complex, one invertible entry at a time.
//
// Cancelling x -> y (coefficient a) removes x and y and replaces every other
// entry z -> w by d(z -> w) - d(z -> y) a^{-1} d(x -> w). The result is a
// homotopy equivalent complex on the remaining generators.

#include <cstddef>
#include <functional>
#include <queue>
#include <vector>

#include "linksplit/sparse_matrix.hpp"

namespace linksplit {

template <Field F>
class CancellationState {
 public:
  /// `filtration[i]` is the filtration degree of generator i; d lowers it by a nonnegative amount.
  CancellationState(const SparseMatrix<F>& d, std::vector<int> filtration)
      : filtration_(std::move(filtration)),
        out_(d.cols()),
        in_(d.cols()),
        alive_(d.cols(), true),
        mark_(d.cols(), 0),
        alive_count_(d.cols()) {
    for (std::size_t c = 0; c < d.cols(); ++c) {
      out_[c] = d.column(c).entries;
      for (const auto& [r, v] : out_[c]) in_[r].push_back(static_cast<Index>(c));
    }
  }

  /// Cancels entries whose filtration drop is exactly `drop` (any drop when negative),
  /// always taking the smallest (source, target) pair. Returns the number of cancellations.
  std::size_t run_stage(int drop) {
    std::priority_queue<Index, std::vector<Index>, std::greater<>> heap;
    for (Index x = 0; x < out_.size(); ++x)
      if (alive_[x] && eligible(x, drop) >= 0) heap.push(x);
    std::size_t count = 0;
    while (!heap.empty()) {
      const Index x = heap.top();
      heap.pop();
      if (!alive_[x]) continue;
      const long pos = eligible(x, drop);
      if (pos < 0) continue;
      const Index y = out_[x][pos].first;
      for (Index z : cancel(x, y)) heap.push(z);
      ++count;
    }
    return count;
  }

  bool alive(Index i) const { return alive_[i]; }
  std::size_t alive_count() const { return alive_count_; }
  std::size_t entry_count() const {
    std::size_t n = 0;
    for (Index i = 0; i < out_.size(); ++i)
      if (alive_[i]) n += out_[i].size();
    return n;
  }
  const std::vector<std::pair<Index, F>>& out(Index i) const { return out_[i]; }

 private:
  long eligible(Index x, int drop) const {
    const auto& row = out_[x];
    for (std::size_t k = 0; k < row.size(); ++k)
      if (drop < 0 || filtration_[x] - filtration_[row[k].first] == drop) return static_cast<long>(k);
    return -1;
  }

  static bool has_entry(const std::vector<std::pair<Index, F>>& row, Index y) {
    auto it = std::lower_bound(row.begin(), row.end(), y, [](const auto& e, Index k) { return e.first < k; });
    return it != row.end() && it->first == y;
  }

  /// Live sources with an entry into y, deduplicated; compacts the lazy in-list.
  std::vector<Index> sources_of(Index y) {
    auto& list = in_[y];
    std::vector<Index> live;
    live.reserve(list.size());
    for (Index z : list) {
      if (!alive_[z] || mark_[z] == y + 1) continue;
      if (!has_entry(out_[z], y)) continue;
      mark_[z] = y + 1;
      live.push_back(z);
    }
    for (Index z : live) mark_[z] = 0;
    list = live;
    return live;
  }

  std::vector<Index> cancel(Index x, Index y) {
    const auto& ox = out_[x];
    auto it = std::lower_bound(ox.begin(), ox.end(), y, [](const auto& e, Index k) { return e.first < k; });
    const F ainv = it->second.inv();
    std::vector<Index> touched = sources_of(y);
    std::erase(touched, x);
    for (Index z : touched) {
      const auto& oz = out_[z];
      auto jt = std::lower_bound(oz.begin(), oz.end(), y, [](const auto& e, Index k) { return e.first < k; });
      const F factor = -(jt->second * ainv);
      merge_into(z, factor, ox);
    }
    for (Index w : sources_of(x)) {
      auto& ow = out_[w];
      auto jt = std::lower_bound(ow.begin(), ow.end(), x, [](const auto& e, Index k) { return e.first < k; });
      ow.erase(jt);
    }
    for (Index v : {x, y}) {
      alive_[v] = false;
      std::vector<std::pair<Index, F>>().swap(out_[v]);
      std::vector<Index>().swap(in_[v]);
    }
    alive_count_ -= 2;
    return touched;
  }

  /// out_[z] += factor * row, registering z as a source of any new target.
  void merge_into(Index z, const F& factor, const std::vector<std::pair<Index, F>>& row) {
    auto& a = out_[z];
    std::vector<std::pair<Index, F>> merged;
    merged.reserve(a.size() + row.size());
    auto p = a.begin();
    auto q = row.begin();
    while (p != a.end() || q != row.end()) {
      if (q == row.end() || (p != a.end() && p->first < q->first)) {
        merged.push_back(std::move(*p++));
      } else if (p == a.end() || q->first < p->first) {
        merged.emplace_back(q->first, factor * q->second);
        in_[q->first].push_back(z);
        ++q;
      } else {
        F s = p->second + factor * q->second;
        if (!s.is_zero()) merged.emplace_back(p->first, std::move(s));
        ++p;
        ++q;
      }
    }
    a = std::move(merged);
  }

  std::vector<int> filtration_;
  std::vector<std::vector<std::pair<Index, F>>> out_;
  std::vector<std::vector<Index>> in_;
  std::vector<bool> alive_;
  std::vector<Index> mark_;
  std::size_t alive_count_ = 0;
};

}  // namespace linksplit
