#include "linksplit/bounds.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>

#include "json.hpp"

namespace linksplit {

using nlohmann::json;

PoincarePolynomial tensor(const PoincarePolynomial& a, const PoincarePolynomial& b) {
  PoincarePolynomial p;
  for (const auto& [ka, ra] : a.terms)
    for (const auto& [kb, rb] : b.terms) p.terms[{ka.first + kb.first, ka.second + kb.second}] += ra * rb;
  return p;
}

namespace {

template <Field F>
int pair_bound(const LinkDiagram& two) {
  const int lk = linking_matrix(two)[0][1];
  if (lk != 0) return std::abs(lk);
  const int first = 0, second = 1;
  const auto k1 = khovanov<F>(sublink(two, std::span<const int>(&first, 1)));
  const auto k2 = khovanov<F>(sublink(two, std::span<const int>(&second, 1)));
  return khovanov<F>(two) == tensor(k1, k2) ? 0 : 2;
}

}  // namespace

template <Field F>
int b_lk_prime(const LinkDiagram& d, bool assume_nonsplit) {
  const int m = d.num_components();
  if (m < 2) return 0;
  if (m == 2) {
    if (assume_nonsplit) {
      const int lk = std::abs(linking_matrix(d)[0][1]);
      return lk != 0 ? lk : 2;
    }
    return pair_bound<F>(d);
  }
  int sum = 0;
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j) {
      const int pair[2] = {i, j};
      sum += pair_bound<F>(sublink(d, pair));
    }
  return assume_nonsplit ? std::max(sum, 2) : sum;
}

int u_bound(const LinkDiagram& d) {
  const int m = d.num_components();
  if (m > 10) throw TooManyComponents("layering bound is limited to 10 components");
  if (m < 2) return 0;
  // count[a][b]: mixed crossings with component a over component b.
  std::vector<std::vector<int>> count(m, std::vector<int>(m, 0));
  for (const auto& ci : d.crossing_infos())
    if (ci.mixed) ++count[ci.over_component][ci.under_component];
  std::vector<int> order(m);
  std::iota(order.begin(), order.end(), 0);
  int best = static_cast<int>(d.num_crossings());
  do {
    // order[k] is the component in layer k; crossings with the upper strand in a lower layer are changed.
    int cost = 0;
    for (int a = 0; a < m; ++a)
      for (int b = a + 1; b < m; ++b) cost += count[order[a]][order[b]];
    best = std::min(best, cost);
  } while (std::next_permutation(order.begin(), order.end()));
  return best;
}

template <Field F>
SplitReport sp_report(const LinkDiagram& d, const std::vector<F>& weights, bool assume_nonsplit) {
  SplitReport r;
  const auto lk = linking_matrix(d);
  const int m = d.num_components();
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j) r.lk.push_back({i + 1, j + 1, lk[i][j]});
  r.b_lk_prime = b_lk_prime<F>(d, assume_nonsplit);
  r.b = collapse_page(pages_by_cancellation(build(d, weights)));
  r.u = u_bound(d);
  int lower = std::max(r.b_lk_prime, r.b);
  if (m == 2 && (lower - std::abs(lk[0][1])) % 2 != 0) ++lower;
  r.sp_min = lower;
  r.sp_max = r.u;
  return r;
}

std::string report_to_json(const SplitReport& r) {
  json lk = json::array();
  for (const auto& e : r.lk) lk.push_back({e.i, e.j, e.value});
  json j = {{"lk", lk},         {"b_lk_prime", r.b_lk_prime}, {"b", r.b},
            {"u", r.u},         {"sp_min", r.sp_min},         {"sp_max", r.sp_max}};
  return j.dump();
}

SplitReport report_from_json(std::string_view text) {
  try {
    const json j = json::parse(text);
    SplitReport r;
    for (const auto& e : j.at("lk")) r.lk.push_back({e.at(0).get<int>(), e.at(1).get<int>(), e.at(2).get<int>()});
    r.b_lk_prime = j.at("b_lk_prime").get<int>();
    r.b = j.at("b").get<int>();
    r.u = j.at("u").get<int>();
    r.sp_min = j.at("sp_min").get<int>();
    r.sp_max = j.at("sp_max").get<int>();
    return r;
  } catch (const json::exception& e) {
    throw Error(std::string("malformed report JSON: ") + e.what());
  }
}

std::string page_to_json(const Page& p, int m) {
  json terms = json::array();
  const auto poly = p.poincare(m);
  for (const auto& [key, rank] : poly.terms) terms.push_back({key.first, key.second, rank});
  json j = {{"page", p.index}, {"poincare", terms}, {"rank", poly.rank()}};
  return j.dump();
}

Page page_from_json(std::string_view text, int m) {
  try {
    const json j = json::parse(text);
    Page p;
    p.index = j.at("page").get<int>();
    std::size_t total = 0;
    for (const auto& e : j.at("poincare")) {
      const int t = e.at(0).get<int>(), q = e.at(1).get<int>();
      const auto rank = e.at(2).get<std::size_t>();
      if ((q - m) % 2 != 0) throw Error("quantum degree with the wrong parity in page JSON");
      p.table[{t - q, (q - m) / 2}] += rank;
      total += rank;
    }
    if (total != j.at("rank").get<std::size_t>()) throw Error("page JSON rank does not match its terms");
    return p;
  } catch (const json::exception& e) {
    throw Error(std::string("malformed page JSON: ") + e.what());
  }
}

#define LINKSPLIT_INSTANTIATE(F)                                                      \
  template int b_lk_prime<F>(const LinkDiagram&, bool);                               \
  template SplitReport sp_report<F>(const LinkDiagram&, const std::vector<F>&, bool);

LINKSPLIT_INSTANTIATE(F2)
LINKSPLIT_INSTANTIATE(GF4)
LINKSPLIT_INSTANTIATE(GF8)
LINKSPLIT_INSTANTIATE(GF16)
LINKSPLIT_INSTANTIATE(GF256)
LINKSPLIT_INSTANTIATE(GF65536)
LINKSPLIT_INSTANTIATE(Rational)

}  // namespace linksplit
