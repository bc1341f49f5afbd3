#include "linksplit/spectral.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <sstream>

#include "linksplit/reduction.hpp"

namespace linksplit {

std::size_t PoincarePolynomial::rank() const {
  std::size_t r = 0;
  for (const auto& [k, v] : terms) r += v;
  return r;
}

std::string PoincarePolynomial::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (const auto& [key, rank] : terms) {
    if (rank == 0) continue;
    const auto [i, j] = key;
    if (!first) os << " + ";
    first = false;
    const bool monomial = i != 0 || j != 0;
    if (rank != 1 || !monomial) os << rank;
    if (i != 0) os << "t^{" << i << '}';
    if (j != 0) os << "q^{" << j << '}';
  }
  if (first) return "0";
  return os.str();
}

PoincarePolynomial PoincarePolynomial::parse(std::string_view text) {
  std::string s;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
  PoincarePolynomial p;
  if (s == "0") return p;
  std::size_t i = 0;
  auto fail = [&] { throw Error("cannot parse polynomial '" + std::string(text) + "'"); };
  auto read_int = [&](int& out) {
    const char* b = s.data() + i;
    auto [ptr, ec] = std::from_chars(b, s.data() + s.size(), out);
    if (ec != std::errc() || ptr == b) fail();
    i += ptr - b;
  };
  auto exponent = [&](int& out) {
    ++i;
    if (i >= s.size() || s[i] != '^') fail();
    ++i;
    const bool braced = i < s.size() && s[i] == '{';
    if (braced) ++i;
    read_int(out);
    if (braced) {
      if (i >= s.size() || s[i] != '}') fail();
      ++i;
    }
  };
  while (i < s.size()) {
    int coeff = 1;
    bool any = false;
    if (std::isdigit(static_cast<unsigned char>(s[i]))) {
      read_int(coeff);
      any = true;
    }
    int ti = 0, qj = 0;
    if (i < s.size() && s[i] == 't') {
      exponent(ti);
      any = true;
    }
    if (i < s.size() && s[i] == 'q') {
      exponent(qj);
      any = true;
    }
    if (!any || coeff < 0) fail();
    p.terms[{ti, qj}] += static_cast<std::size_t>(coeff);
    if (i < s.size()) {
      if (s[i] != '+') fail();
      ++i;
      if (i == s.size()) fail();
    }
  }
  return p;
}

std::map<int, long long> PoincarePolynomial::euler_characteristic() const {
  std::map<int, long long> chi;
  for (const auto& [key, rank] : terms) {
    const long long v = static_cast<long long>(rank) * ((key.first % 2 == 0) ? 1 : -1);
    if ((chi[key.second] += v) == 0) chi.erase(key.second);
  }
  return chi;
}

std::size_t Page::rank() const {
  std::size_t r = 0;
  for (const auto& [k, v] : table) r += v;
  return r;
}

PoincarePolynomial Page::poincare(int m) const {
  PoincarePolynomial p;
  for (const auto& [key, rank] : table) {
    if (rank == 0) continue;
    const auto [l, g] = key;
    p.terms[{l + 2 * g + m, 2 * g + m}] += rank;
  }
  return p;
}

int collapse_page(const SpectralSequence& s) {
  if (s.pages.empty()) return 0;
  const Page& inf = s.infinity();
  int b = 0;
  for (const auto& p : s.pages)
    if (p.table != inf.table) b = std::max(b, p.index);
  return b;
}

namespace {

/// Keeps E_1 ... E_{b+1} where the last page listed is the limit.
SpectralSequence trim(int m, std::vector<Page> pages) {
  SpectralSequence s;
  s.m = m;
  s.pages = std::move(pages);
  const int b = collapse_page(s);
  s.pages.resize(static_cast<std::size_t>(b) + 1);
  return s;
}

}  // namespace

template <Field F>
PoincarePolynomial khovanov(const LinkDiagram& d) {
  const std::vector<F> zero(d.num_components(), F::zero());
  const auto c = build(d, zero, SignAssignment(d.num_crossings(), 1));
  CancellationState<F> state(c.differential, std::vector<int>(c.size(), 0));
  state.run_stage(-1);
  PoincarePolynomial p;
  for (Index j = 0; j < c.size(); ++j)
    if (state.alive(j)) ++p.terms[{c.generators[j].grading.h, c.generators[j].grading.q}];
  return p;
}

template <Field F>
SpectralSequence pages_by_cancellation(const FilteredComplex<F>& c) {
  std::vector<int> g(c.size());
  for (Index j = 0; j < c.size(); ++j) g[j] = c.generators[j].grading.g;
  CancellationState<F> state(c.differential, std::move(g));
  const int width = c.g_max - c.g_min;
  std::vector<Page> pages;
  for (int r = 0; r <= width; ++r) {
    state.run_stage(r);
    Page p;
    p.index = r + 1;
    for (Index j = 0; j < c.size(); ++j)
      if (state.alive(j)) ++p.table[{c.generators[j].grading.l, c.generators[j].grading.g}];
    pages.push_back(std::move(p));
  }
  if (state.entry_count() != 0) throw InvariantViolation("differential survives past the filtration width");
  return trim(c.m, std::move(pages));
}

namespace {

/// The complex split by l-degree, with d as local matrices C_l -> C_{l+1}.
template <Field F>
struct Blocks {
  std::map<int, std::vector<Index>> gens;  // l -> global indices (ascending)
  std::map<int, SparseMatrix<F>> d;        // l -> local matrix
  std::map<int, std::vector<int>> g;       // l -> g of each local generator

  explicit Blocks(const FilteredComplex<F>& c) {
    std::vector<Index> local(c.size());
    for (Index j = 0; j < c.size(); ++j) {
      auto& v = gens[c.generators[j].grading.l];
      local[j] = static_cast<Index>(v.size());
      v.push_back(j);
    }
    for (const auto& [l, list] : gens) {
      auto& gl = g[l];
      for (Index j : list) gl.push_back(c.generators[j].grading.g);
      auto next = gens.find(l + 1);
      const std::size_t rows = next == gens.end() ? 0 : next->second.size();
      std::vector<SparseVector<F>> cols;
      cols.reserve(list.size());
      for (Index j : list) {
        SparseVector<F> v = c.differential.column(j);
        for (auto& e : v.entries) e.first = local[e.first];
        cols.push_back(std::move(v));
      }
      d.emplace(l, SparseMatrix<F>::from_columns(rows, std::move(cols)));
    }
  }

  std::size_t size(int l) const {
    auto it = gens.find(l);
    return it == gens.end() ? 0 : it->second.size();
  }

  /// Basis of {x in C_l : g(x) <= col_max, components of dx with g > row_max vanish}.
  std::vector<SparseVector<F>> kernel(int l, int col_max, int row_max) const {
    auto it = gens.find(l);
    if (it == gens.end()) return {};
    const auto& gl = g.at(l);
    const auto& dl = d.at(l);
    const std::vector<int>* gn = nullptr;
    if (auto nt = g.find(l + 1); nt != g.end()) gn = &nt->second;
    std::vector<Index> keep;
    std::vector<SparseVector<F>> cols;
    for (Index j = 0; j < gl.size(); ++j) {
      if (gl[j] > col_max) continue;
      keep.push_back(j);
      SparseVector<F> v;
      for (const auto& e : dl.column(j).entries)
        if (gn && (*gn)[e.first] > row_max) v.entries.push_back(e);
      cols.push_back(std::move(v));
    }
    auto basis = kernel_basis(SparseMatrix<F>::from_columns(dl.rows(), std::move(cols)));
    for (auto& v : basis)
      for (auto& e : v.entries) e.first = keep[e.first];
    return basis;
  }
};

}  // namespace

template <Field F>
SpectralSequence pages_direct(const FilteredComplex<F>& c, std::size_t cap) {
  if (c.size() > cap)
    throw Error("complex has " + std::to_string(c.size()) + " generators, above the oracle cap of " +
                std::to_string(cap));
  const Blocks<F> blocks(c);
  const int width = c.g_max - c.g_min;
  std::vector<Page> pages;
  for (int r = 1; r <= width + 1; ++r) {
    Page p;
    p.index = r;
    for (const auto& [l, list] : blocks.gens) {
      const auto& dprev = blocks.d.find(l - 1);
      for (int k = c.g_min; k <= c.g_max; ++k) {
        const std::size_t z = blocks.kernel(l, k, k - r).size();
        if (z == 0) continue;
        auto zr = blocks.kernel(l, k - 1, k - r);
        std::vector<SparseVector<F>> b;
        if (dprev != blocks.d.end())
          for (const auto& y : blocks.kernel(l - 1, k + r - 1, k)) b.push_back(dprev->second.apply(y));
        const std::size_t denom = span_dim<F>(list.size(), {zr, b});
        if (z > denom) p.table[{l, k}] = z - denom;
      }
    }
    pages.push_back(std::move(p));
  }
  return trim(c.m, std::move(pages));
}

LaurentPolynomial jones_statesum(const LinkDiagram& d) {
  const std::size_t n = d.num_crossings();
  if (n > 30) throw Error("state sum is limited to 30 crossings");
  // Slot 4i+p is position p of crossing i; each arc owns two slots.
  std::vector<int> other(4 * n, -1);
  std::map<int, int> first_slot;
  for (std::size_t i = 0; i < n; ++i)
    for (int p = 0; p < 4; ++p) {
      const int slot = static_cast<int>(4 * i) + p;
      const int arc = d.crossing(i)[p];
      auto [it, fresh] = first_slot.emplace(arc, slot);
      if (!fresh) {
        other[slot] = it->second;
        other[it->second] = slot;
      }
    }
  // (q + 1/q)^p for p up to n + circles.
  const int maxp = static_cast<int>(n) + d.crossingless_circles() + 1;
  std::vector<LaurentPolynomial> power(maxp + 1);
  power[0] = {{0, 1}};
  for (int p = 1; p <= maxp; ++p)
    for (const auto& [e, v] : power[p - 1]) {
      power[p][e + 1] += v;
      power[p][e - 1] += v;
    }

  std::map<int, long long> bracket;
  std::vector<char> seen(4 * n);
  for (std::uint64_t state = 0; state < (std::uint64_t{1} << n); ++state) {
    std::fill(seen.begin(), seen.end(), 0);
    int loops = d.crossingless_circles();
    for (std::size_t s0 = 0; s0 < 4 * n; ++s0) {
      if (seen[s0]) continue;
      ++loops;
      int s = static_cast<int>(s0);
      while (!seen[s]) {
        seen[s] = 1;
        const int i = s / 4, p = s % 4;
        const int partner = ((state >> i) & 1) ? (3 - p) : (p ^ 1);
        const int t = 4 * i + partner;
        seen[t] = 1;
        s = other[t];
      }
    }
    const int weight = std::popcount(state);
    const long long sign = (weight % 2) ? -1 : 1;
    for (const auto& [e, v] : power[loops]) bracket[e + weight] += sign * v;
  }
  LaurentPolynomial out;
  const long long sign = (d.n_minus() % 2) ? -1 : 1;
  const int shift = d.n_plus() - 2 * d.n_minus();
  for (const auto& [e, v] : bracket)
    if (v != 0) out[e + shift] = sign * v;
  return out;
}

std::string laurent_to_string(const LaurentPolynomial& p) {
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, v] : p) {
    if (v == 0) continue;
    if (!first) os << (v > 0 ? " + " : " - ");
    else if (v < 0) os << '-';
    first = false;
    const long long a = v < 0 ? -v : v;
    if (a != 1 || e == 0) os << a;
    if (e != 0) os << "q^{" << e << '}';
  }
  return first ? "0" : os.str();
}

#define LINKSPLIT_INSTANTIATE(F)                                                      \
  template PoincarePolynomial khovanov<F>(const LinkDiagram&);                        \
  template SpectralSequence pages_direct<F>(const FilteredComplex<F>&, std::size_t);  \
  template SpectralSequence pages_by_cancellation<F>(const FilteredComplex<F>&);

LINKSPLIT_INSTANTIATE(F2)
LINKSPLIT_INSTANTIATE(GF4)
LINKSPLIT_INSTANTIATE(GF8)
LINKSPLIT_INSTANTIATE(GF16)
LINKSPLIT_INSTANTIATE(GF256)
LINKSPLIT_INSTANTIATE(GF65536)
LINKSPLIT_INSTANTIATE(Rational)

}  // namespace linksplit
