#pragma once

// Lower and upper bounds on the splitting number.

#include <string>
#include <string_view>
#include <tuple>
#include <vector>

#include "linksplit/spectral.hpp"

namespace linksplit {

struct LinkingEntry {
  int i = 0;  // 1-based, i < j
  int j = 0;
  int value = 0;
  friend bool operator==(const LinkingEntry&, const LinkingEntry&) = default;
};

struct SplitReport {
  std::vector<LinkingEntry> lk;
  int b_lk_prime = 0;
  int b = 0;
  int u = 0;
  int sp_min = 0;
  int sp_max = 0;
  friend bool operator==(const SplitReport&, const SplitReport&) = default;
};

/// Bigraded Kh of a disjoint union: the product of the two Poincare polynomials.
PoincarePolynomial tensor(const PoincarePolynomial& a, const PoincarePolynomial& b);

/// Two components: |lk| if nonzero, else 2 if Kh(L) differs from Kh(K1 + K2), else 0.
/// More components: the sum over pairs, raised to at least 2 when `assume_nonsplit`.
/// A two-component link flagged non-split with lk = 0 gets 2 without the Kh test.
template <Field F>
int b_lk_prime(const LinkDiagram& d, bool assume_nonsplit = false);

/// Fewest mixed crossings to change so the components lie in layers, over all orderings.
/// Throws TooManyComponents above 10 components.
int u_bound(const LinkDiagram& d);

template <Field F>
SplitReport sp_report(const LinkDiagram& d, const std::vector<F>& weights, bool assume_nonsplit = false);

std::string report_to_json(const SplitReport& r);
SplitReport report_from_json(std::string_view text);

/// {"page": r, "poincare": [[i, j, rank], ...], "rank": total}
std::string page_to_json(const Page& p, int m);
/// Inverse of page_to_json for a link with m components.
Page page_from_json(std::string_view text, int m);

}  // namespace linksplit
