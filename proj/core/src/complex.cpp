#include "linksplit/complex.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

#include "linksplit/reduction.hpp"

namespace linksplit {

Cube Cube::enumerate(const LinkDiagram& d) {
  const std::size_t n = d.num_crossings();
  if (n > kMaxComplexCrossings)
    throw Error("diagrams with more than " + std::to_string(kMaxComplexCrossings) +
                " crossings are too large to build a complex for");
  Cube cube;
  const Mask count = Mask{1} << n;
  cube.resolutions.reserve(count);
  cube.offset.reserve(count + 1);
  std::uint64_t total = 0;
  for (Mask I = 0; I < count; ++I) {
    cube.offset.push_back(static_cast<Index>(total));
    cube.resolutions.push_back(resolve(d, I));
    total += std::uint64_t{1} << cube.resolutions.back().num_circles;
    if (total > std::numeric_limits<Index>::max()) throw Error("complex has too many generators");
  }
  cube.offset.push_back(static_cast<Index>(total));
  return cube;
}

std::vector<int> default_basepoints(const LinkDiagram& d) {
  std::vector<int> points;
  const int traced = d.num_components() - d.crossingless_circles();
  for (int c = 0; c < traced; ++c) points.push_back(d.component_arcs(c).front());
  for (int k = 0; k < d.crossingless_circles(); ++k) points.push_back(d.virtual_arc(k));
  return points;
}

template <Field F>
FilteredComplex<F> build(const LinkDiagram& d, const std::vector<F>& weights, const SignAssignment& s) {
  if (static_cast<int>(weights.size()) != d.num_components())
    throw WeightFieldMismatch("expected " + std::to_string(d.num_components()) + " weights, got " +
                              std::to_string(weights.size()));
  if (s.size() != d.num_crossings()) throw Error("sign assignment has the wrong length");

  FilteredComplex<F> c;
  c.diagram = d;
  c.weights = weights;
  c.signs = s;
  c.m = d.num_components();
  c.n_plus = d.n_plus();
  c.n_minus = d.n_minus();
  c.writhe = d.writhe();
  c.cube = Cube::enumerate(d);
  const Cube& cube = c.cube;
  const std::size_t n = d.num_crossings();
  const std::size_t total = cube.num_generators();

  c.generators.reserve(total);
  for (Mask I = 0; I < cube.resolutions.size(); ++I) {
    const auto& r = cube.resolutions[I];
    for (std::uint32_t mono = 0; mono < (1u << r.num_circles); ++mono)
      c.generators.push_back({I, mono, gradings(d, r, mono)});
  }
  if (!c.generators.empty()) {
    auto [lo, hi] = std::minmax_element(c.generators.begin(), c.generators.end(),
                                        [](const auto& a, const auto& b) { return a.grading.g < b.grading.g; });
    c.g_min = lo->grading.g;
    c.g_max = hi->grading.g;
  }

  std::vector<F> coeff(n);
  for (std::size_t i = 0; i < n; ++i) coeff[i] = weight_coeff(d, i, s, weights);

  auto check = [&](Index from, Index to, bool forward) {
    const auto& a = c.generators[from].grading;
    const auto& b = c.generators[to].grading;
    const bool ok = forward ? (b.h == a.h + 1 && b.q == a.q) : (b.h == a.h - 1 && b.q == a.q - 2);
    if (!ok || b.l != a.l + 1) throw InvariantViolation("differential entry with the wrong bigrading");
  };

  std::vector<SparseVector<F>> columns(total);
  std::vector<std::pair<Index, F>> entries;
  std::array<std::uint32_t, 2> out{};
  for (Mask I = 0; I < cube.resolutions.size(); ++I) {
    const auto& from = cube.resolutions[I];
    std::vector<EdgeMap> maps(n);
    std::vector<bool> active(n, false);
    for (std::size_t i = 0; i < n; ++i) {
      const Mask bit = Mask{1} << i;
      const bool up = !(I & bit);
      if (!up && coeff[i].is_zero()) continue;
      maps[i] = edge_map(d, from, cube.resolutions[I ^ bit], static_cast<int>(i));
      active[i] = true;
    }
    for (std::uint32_t mono = 0; mono < (1u << from.num_circles); ++mono) {
      const Index src = cube.index_of(I, mono);
      entries.clear();
      for (std::size_t i = 0; i < n; ++i) {
        if (!active[i]) continue;
        const Mask bit = Mask{1} << i;
        const bool up = !(I & bit);
        const Mask J = I ^ bit;
        const int sign = cube_sign(up ? I : J, static_cast<int>(i));
        F value = up ? F::from_int(sign) : (sign > 0 ? coeff[i] : -coeff[i]);
        const int k = maps[i].apply(mono, out);
        for (int j = 0; j < k; ++j) {
          const Index dst = cube.index_of(J, out[j]);
          check(src, dst, up);
          entries.emplace_back(dst, value);
        }
      }
      std::sort(entries.begin(), entries.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
      auto& col = columns[src].entries;
      for (auto& [r, v] : entries) {
        if (!col.empty() && col.back().first == r) {
          col.back().second += v;
          if (col.back().second.is_zero()) col.pop_back();
        } else if (!v.is_zero()) {
          col.emplace_back(r, std::move(v));
        }
      }
    }
  }
  c.differential = SparseMatrix<F>::from_columns(total, std::move(columns));
  return c;
}

template <Field F>
FilteredComplex<F> build(const LinkDiagram& d, const std::vector<F>& weights) {
  return build(d, weights, sign_assignment(d));
}

template <Field F>
DSquaredCheck verify_d_squared(const FilteredComplex<F>& c) {
  const auto& D = c.differential;
  for (std::size_t j = 0; j < D.cols(); ++j)
    if (!D.apply(D.column(j)).empty()) return {false, static_cast<Index>(j)};
  return {};
}

template <Field F>
BasepointAction<F> basepoint_action(const FilteredComplex<F>& c, int arc) {
  const std::size_t n = c.size();
  std::vector<SparseVector<F>> cols(n);
  for (Index j = 0; j < n; ++j) {
    const auto& gen = c.generators[j];
    const int circle = c.cube.resolutions[gen.resolution].circle_of(arc);
    if (circle < 0) throw Error("arc " + std::to_string(arc) + " is not part of the diagram");
    if ((gen.monomial >> circle) & 1u) continue;
    cols[j].entries.emplace_back(c.cube.index_of(gen.resolution, gen.monomial | (1u << circle)), F::one());
  }
  return {arc, SparseMatrix<F>::from_columns(n, std::move(cols))};
}

namespace {

/// Columns of d reordered by ascending g (stable); returns the permutation.
template <Field F>
std::vector<Index> order_by_g(const FilteredComplex<F>& c) {
  std::vector<Index> perm(c.size());
  std::iota(perm.begin(), perm.end(), 0);
  std::stable_sort(perm.begin(), perm.end(), [&](Index a, Index b) {
    return c.generators[a].grading.g < c.generators[b].grading.g;
  });
  return perm;
}

template <Field F>
std::vector<SparseVector<F>> unpermute(std::vector<SparseVector<F>> vs, const std::vector<Index>& perm) {
  for (auto& v : vs) {
    for (auto& e : v.entries) e.first = perm[e.first];
    std::sort(v.entries.begin(), v.entries.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  }
  return vs;
}

}  // namespace

template <Field F>
std::vector<std::size_t> filtration_rank_profile(const FilteredComplex<F>& c) {
  const auto perm = order_by_g(c);
  std::vector<SparseVector<F>> cols;
  cols.reserve(c.size());
  for (Index j : perm) cols.push_back(c.differential.column(j));
  auto red = reduce_columns(SparseMatrix<F>::from_columns(c.size(), std::move(cols)), true);

  // Kernel vectors from column j live in F^{g(j)}: reduction only mixes earlier columns.
  std::vector<SparseVector<F>> basis;
  std::vector<int> level;
  for (std::size_t j = 0; j < c.size(); ++j)
    if (red.is_pivot[j]) basis.push_back(red.reduced[j]);
  const std::size_t boundaries = basis.size();
  std::vector<SparseVector<F>> cycles;
  for (std::size_t j = 0; j < c.size(); ++j)
    if (!red.is_pivot[j]) {
      cycles.push_back(red.ops[j]);
      level.push_back(c.generators[perm[j]].grading.g);
    }
  cycles = unpermute(std::move(cycles), perm);
  basis.insert(basis.end(), cycles.begin(), cycles.end());
  const auto all = reduce_columns(SparseMatrix<F>::from_columns(c.size(), std::move(basis)), false);

  std::map<int, std::size_t> new_at;
  for (std::size_t k = 0; k < cycles.size(); ++k)
    if (all.is_pivot[boundaries + k]) ++new_at[level[k]];
  // Levels without new classes repeat the previous rank.
  std::vector<std::size_t> full;
  if (!new_at.empty()) {
    auto it = new_at.begin();
    std::size_t rank = 0;
    for (int g = new_at.begin()->first; g <= new_at.rbegin()->first; ++g) {
      if (it != new_at.end() && it->first == g) rank += (it++)->second;
      full.push_back(rank);
    }
  }
  return full;
}

template <Field F>
std::map<int, std::size_t> total_homology(const FilteredComplex<F>& c) {
  std::vector<int> flat(c.size(), 0);
  CancellationState<F> state(c.differential, std::move(flat));
  state.run_stage(-1);
  std::map<int, std::size_t> ranks;
  for (Index j = 0; j < c.size(); ++j)
    if (state.alive(j)) ++ranks[c.generators[j].grading.l];
  return ranks;
}

namespace {

template <Field F>
struct CyclesAndBoundaries {
  std::vector<SparseVector<F>> cycles;
  std::vector<SparseVector<F>> boundaries;
};

template <Field F>
CyclesAndBoundaries<F> cycles_and_boundaries(const FilteredComplex<F>& c) {
  auto red = reduce_columns(c.differential, true);
  CyclesAndBoundaries<F> out;
  for (std::size_t j = 0; j < c.size(); ++j) {
    if (red.is_pivot[j]) out.boundaries.push_back(std::move(red.reduced[j]));
    else out.cycles.push_back(std::move(red.ops[j]));
  }
  return out;
}

}  // namespace

template <Field F>
bool free_module_test(const FilteredComplex<F>& c, const std::vector<int>& basepoints) {
  std::size_t dim = 0;
  for (const auto& [l, r] : total_homology(c)) dim += r;
  if (dim != (std::size_t{1} << c.m)) return false;
  auto product = SparseMatrix<F>::identity(c.size());
  for (int p : basepoints) product = basepoint_action(c, p).matrix * product;
  const auto zb = cycles_and_boundaries(c);
  std::vector<SparseVector<F>> images;
  for (const auto& z : zb.cycles) images.push_back(product.apply(z));
  const std::size_t rb = zb.boundaries.size();
  return span_dim<F>(c.size(), {zb.boundaries, images}) > rb;
}

template <Field F>
bool same_map_on_homology(const FilteredComplex<F>& c, const SparseMatrix<F>& a, const SparseMatrix<F>& b) {
  const auto diff = a - b;
  const auto zb = cycles_and_boundaries(c);
  std::vector<SparseVector<F>> images;
  for (const auto& z : zb.cycles) images.push_back(diff.apply(z));
  return span_dim<F>(c.size(), {zb.boundaries, images}) == zb.boundaries.size();
}

#define LINKSPLIT_INSTANTIATE(F)                                                                      \
  template FilteredComplex<F> build<F>(const LinkDiagram&, const std::vector<F>&, const SignAssignment&); \
  template FilteredComplex<F> build<F>(const LinkDiagram&, const std::vector<F>&);                     \
  template DSquaredCheck verify_d_squared<F>(const FilteredComplex<F>&);                               \
  template BasepointAction<F> basepoint_action<F>(const FilteredComplex<F>&, int);                     \
  template std::vector<std::size_t> filtration_rank_profile<F>(const FilteredComplex<F>&);             \
  template bool free_module_test<F>(const FilteredComplex<F>&, const std::vector<int>&);               \
  template std::map<int, std::size_t> total_homology<F>(const FilteredComplex<F>&);                    \
  template bool same_map_on_homology<F>(const FilteredComplex<F>&, const SparseMatrix<F>&, const SparseMatrix<F>&);

LINKSPLIT_INSTANTIATE(F2)
LINKSPLIT_INSTANTIATE(GF4)
LINKSPLIT_INSTANTIATE(GF8)
LINKSPLIT_INSTANTIATE(GF16)
LINKSPLIT_INSTANTIATE(GF256)
LINKSPLIT_INSTANTIATE(GF65536)
LINKSPLIT_INSTANTIATE(Rational)

}  // namespace linksplit
