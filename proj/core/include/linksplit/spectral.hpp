#pragma once

// Pages of the spectral sequence of the g-filtration, computed either from the
// Z/B subspace definitions (small complexes) or by staged cancellation.

#include <cstddef>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "linksplit/complex.hpp"

namespace linksplit {

/// Sum of rank * t^i q^j, keyed by (i, j).
struct PoincarePolynomial {
  std::map<std::pair<int, int>, std::size_t> terms;

  std::size_t rank() const;
  /// "t^{-2}q^{-2} + 2 + t^{1}q^{2}": ascending (i, j), implicit t^0 and q^0, "0" when empty.
  std::string to_string() const;
  /// Accepts the output of to_string (whitespace-insensitive).
  static PoincarePolynomial parse(std::string_view text);
  /// Sum of (-1)^i rank q^j.
  std::map<int, long long> euler_characteristic() const;

  friend bool operator==(const PoincarePolynomial&, const PoincarePolynomial&) = default;
};

struct Page {
  int index = 1;
  std::map<std::pair<int, int>, std::size_t> table;  // (l, g) -> rank

  std::size_t rank() const;
  /// t = l + 2g + m, q = 2g + m.
  PoincarePolynomial poincare(int m) const;

  friend bool operator==(const Page&, const Page&) = default;
};

struct SpectralSequence {
  int m = 0;
  std::vector<Page> pages;  // E_1 ... E_{b+1}; the last one is E_infinity
  const Page& infinity() const { return pages.back(); }
};

inline constexpr std::size_t kDefaultOracleCap = 3000;

/// Kh(D) over F, bigraded by (h, q).
template <Field F>
PoincarePolynomial khovanov(const LinkDiagram& d);

/// Pages from dim E_r^k = dim Z_r^k - dim(Z_{r-1}^{k-1} + B_{r-1}^k), per l-degree.
/// Throws when the complex has more than `cap` generators.
template <Field F>
SpectralSequence pages_direct(const FilteredComplex<F>& c, std::size_t cap = kDefaultOracleCap);

/// Stage r cancels every entry of filtration drop exactly r; survivors give E_{r+1}.
template <Field F>
SpectralSequence pages_by_cancellation(const FilteredComplex<F>& c);

/// Largest k with E_k != E_infinity, or 0 when E_1 = E_infinity.
int collapse_page(const SpectralSequence& s);

using LaurentPolynomial = std::map<int, long long>;

/// Kauffman-bracket state sum normalized as the graded Euler characteristic of Kh.
LaurentPolynomial jones_statesum(const LinkDiagram& d);

std::string laurent_to_string(const LaurentPolynomial& p);

}  // namespace linksplit
