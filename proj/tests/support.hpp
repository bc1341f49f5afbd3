#pragma once

// Fixture access and brute-force oracles shared by the unit and acceptance tests.
// The oracles avoid the library's reduction code: dense elimination and a
// bracket state sum computed from the PD tuples directly.

#include <map>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include "linksplit/bounds.hpp"

namespace testing {

using namespace linksplit;

inline const std::vector<LinkTableEntry>& fixtures() {
  static const auto table = read_link_table(LINKSPLIT_FIXTURES);
  return table;
}

inline LinkDiagram fixture(const std::string& name) {
  for (const auto& e : fixtures())
    if (e.name == name) return parse_pd(e.pd);
  throw std::runtime_error("missing fixture " + name);
}

template <Field F>
using Dense = std::vector<std::vector<F>>;

template <Field F>
std::size_t dense_rank(Dense<F> a) {
  std::size_t r = 0;
  const std::size_t rows = a.size();
  const std::size_t cols = rows ? a[0].size() : 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && a[p][c].is_zero()) ++p;
    if (p == rows) continue;
    std::swap(a[p], a[r]);
    const F inv = a[r][c].inv();
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || a[i][c].is_zero()) continue;
      const F f = a[i][c] * inv;
      for (std::size_t k = c; k < cols; ++k) a[i][k] -= f * a[r][k];
    }
    ++r;
  }
  return r;
}

template <Field F>
Dense<F> to_dense(const SparseMatrix<F>& m) {
  Dense<F> d(m.rows(), std::vector<F>(m.cols(), F::zero()));
  for (std::size_t c = 0; c < m.cols(); ++c)
    for (const auto& [r, v] : m.column(c).entries) d[r][c] = v;
  return d;
}

/// Kh by dense ranks of the (h, q) blocks of the Khovanov differential.
template <Field F>
PoincarePolynomial dense_khovanov(const LinkDiagram& d) {
  const auto c = build(d, std::vector<F>(d.num_components(), F::zero()));
  std::map<std::pair<int, int>, std::vector<Index>> block;
  for (Index j = 0; j < c.size(); ++j) block[{c.generators[j].grading.h, c.generators[j].grading.q}].push_back(j);
  auto rank_out = [&](int h, int q) -> std::size_t {
    auto src = block.find({h, q});
    auto dst = block.find({h + 1, q});
    if (src == block.end() || dst == block.end()) return 0;
    std::map<Index, std::size_t> row;
    for (std::size_t k = 0; k < dst->second.size(); ++k) row[dst->second[k]] = k;
    Dense<F> m(dst->second.size(), std::vector<F>(src->second.size(), F::zero()));
    for (std::size_t k = 0; k < src->second.size(); ++k)
      for (const auto& [r, v] : c.differential.column(src->second[k]).entries) {
        auto it = row.find(r);
        if (it == row.end()) throw std::runtime_error("differential leaves its (h, q) block");
        m[it->second][k] = v;
      }
    return dense_rank(std::move(m));
  };
  PoincarePolynomial p;
  for (const auto& [key, gens] : block) {
    const auto [h, q] = key;
    const std::size_t dim = gens.size() - rank_out(h, q) - rank_out(h - 1, q);
    if (dim) p.terms[key] = dim;
  }
  return p;
}

using Laurent = std::map<int, long long>;

inline Laurent laurent_mul(const Laurent& a, const Laurent& b) {
  Laurent r;
  for (const auto& [i, x] : a)
    for (const auto& [j, y] : b) r[i + j] += x * y;
  std::erase_if(r, [](const auto& e) { return e.second == 0; });
  return r;
}

/// (-1)^{n-} q^{n+ - 2n-} sum_I (-q)^{|I|} (q + 1/q)^{circles(I)}.
inline Laurent bracket_oracle(const LinkDiagram& d) {
  const auto xs = d.crossings();
  const std::size_t n = xs.size();
  if (n > 20) throw std::runtime_error("bracket oracle limited to 20 crossings");
  std::map<int, int> slot;
  for (const auto& x : xs)
    for (int a : x) slot.emplace(a, static_cast<int>(slot.size()));
  std::vector<Laurent> loop_power{{{0, 1}}};
  const Laurent loop{{-1, 1}, {1, 1}};
  const int max_circles = static_cast<int>(slot.size()) + d.crossingless_circles() + 1;
  while (static_cast<int>(loop_power.size()) <= max_circles) loop_power.push_back(laurent_mul(loop_power.back(), loop));
  Laurent sum;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    std::vector<int> parent(slot.size());
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int v) {
      while (parent[v] != v) v = parent[v] = parent[parent[v]];
      return v;
    };
    auto join = [&](int a, int b) { parent[find(slot[a])] = find(slot[b]); };
    int ones = 0;
    for (std::size_t i = 0; i < n; ++i) {
      const auto& x = xs[i];
      if ((mask >> i) & 1) {
        ++ones;
        join(x[0], x[3]);
        join(x[1], x[2]);
      } else {
        join(x[0], x[1]);
        join(x[2], x[3]);
      }
    }
    int circles = d.crossingless_circles();
    for (std::size_t v = 0; v < parent.size(); ++v) circles += find(static_cast<int>(v)) == static_cast<int>(v);
    const Laurent term = laurent_mul({{ones, (ones & 1) ? -1 : 1}}, loop_power[circles]);
    for (const auto& [k, v] : term) sum[k] += v;
  }
  const int np = d.n_plus(), nm = d.n_minus();
  Laurent out = laurent_mul(sum, {{np - 2 * nm, (nm & 1) ? -1 : 1}});
  std::erase_if(out, [](const auto& e) { return e.second == 0; });
  return out;
}

inline Laurent to_laurent(const std::map<int, long long>& m) {
  Laurent r(m.begin(), m.end());
  std::erase_if(r, [](const auto& e) { return e.second == 0; });
  return r;
}

/// Distinct weights for m components: F2 when m <= 2, GF(4) for three.
template <class Fn>
decltype(auto) with_char2_field(int m, Fn&& fn) {
  if (m <= 2) return fn.template operator()<F2>();
  if (m <= 4) return fn.template operator()<GF4>();
  return fn.template operator()<GF16>();
}

template <Field F>
std::size_t product_of_component_ranks(const LinkDiagram& d) {
  std::size_t p = 1;
  for (int c = 0; c < d.num_components(); ++c) p *= khovanov<F>(sublink(d, std::span<const int>(&c, 1))).rank();
  return p;
}

template <Field F>
PoincarePolynomial split_khovanov(const LinkDiagram& d) {
  PoincarePolynomial p;
  p.terms[{0, 0}] = 1;
  for (int c = 0; c < d.num_components(); ++c) p = tensor(p, khovanov<F>(sublink(d, std::span<const int>(&c, 1))));
  return p;
}

/// Rank of a bigraded polynomial in each l = h - q.
inline std::map<int, std::size_t> by_l(const PoincarePolynomial& p) {
  std::map<int, std::size_t> r;
  for (const auto& [key, rank] : p.terms) r[key.first - key.second] += rank;
  return r;
}

inline std::map<int, std::size_t> by_l(const Page& p) {
  std::map<int, std::size_t> r;
  for (const auto& [key, rank] : p.table) r[key.first] += rank;
  return r;
}

}  // namespace testing
