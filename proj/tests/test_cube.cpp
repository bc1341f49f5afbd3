#include <numeric>

#include "doctest.h"
#include "support.hpp"

using namespace testing;

namespace {

// Circle count of a resolution by direct union-find over the PD tuples.
int count_circles(const LinkDiagram& d, Mask mask) {
  std::vector<int> parent(d.max_arc() + 1);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  for (std::size_t i = 0; i < d.num_crossings(); ++i) {
    const auto& x = d.crossing(i);
    if ((mask >> i) & 1) {
      parent[find(x[0])] = find(x[3]);
      parent[find(x[1])] = find(x[2]);
    } else {
      parent[find(x[0])] = find(x[1]);
      parent[find(x[2])] = find(x[3]);
    }
  }
  int n = d.crossingless_circles();
  for (int a : d.arcs()) n += find(a) == a;
  return n;
}

}  // namespace

TEST_CASE("resolutions match a direct circle count") {
  for (const auto& e : fixtures()) {
    const auto d = parse_pd(e.pd);
    if (d.num_crossings() > 8) continue;
    for (Mask mask = 0; mask < (Mask{1} << d.num_crossings()); ++mask) {
      const auto r = resolve(d, mask);
      REQUIRE_MESSAGE(r.num_circles == count_circles(d, mask), e.name);
      CHECK(std::is_sorted(r.circle_min_arc.begin(), r.circle_min_arc.end()));
      for (int c = 0; c < r.num_circles; ++c) CHECK(r.circle_of(r.circle_min_arc[c]) == c);
    }
  }
}

TEST_CASE("crossingless circles use virtual arcs") {
  const auto d = parse_pd("O O");
  const auto r = resolve(d, 0);
  CHECK(r.num_circles == 2);
  CHECK(r.circle_of(d.virtual_arc(0)) == 0);
  CHECK(r.circle_of(d.virtual_arc(1)) == 1);
}

TEST_CASE("cube signs") {
  CHECK(cube_sign(0b0000, 3) == 1);
  CHECK(cube_sign(0b0001, 3) == -1);
  CHECK(cube_sign(0b0011, 3) == 1);
  CHECK(cube_sign(0b1011, 2) == 1);
  CHECK(cube_sign(0b1011, 0) == 1);
  // Anticommuting squares.
  for (Mask I = 0; I < 16; ++I)
    for (int i = 0; i < 4; ++i)
      for (int j = i + 1; j < 4; ++j) {
        if ((I >> i) & 1 || (I >> j) & 1) continue;
        const Mask a = I | (Mask{1} << i), b = I | (Mask{1} << j);
        CHECK(cube_sign(I, i) * cube_sign(a, j) == -cube_sign(I, j) * cube_sign(b, i));
      }
}

TEST_CASE("gradings") {
  const auto d = fixture("trefoil");
  const auto r = resolve(d, 0);
  const auto top = gradings(d, r, 0);
  CHECK(top.h == 0 - d.n_minus());
  CHECK(top.l == -r.num_circles - d.writhe());
  CHECK(top.q == top.h - top.l);
  CHECK(2 * top.g + d.num_components() == top.q);
  const auto bottom = gradings(d, r, (1u << r.num_circles) - 1);
  CHECK(top.q - bottom.q == 2 * r.num_circles);
  CHECK_THROWS_AS(gradings(d, 0, 1, 0), InvariantViolation);
}

TEST_CASE("merge and split maps") {
  const auto d = fixture("hopf");
  // At the Hopf link, the all-zero resolution has two circles.
  const auto r0 = resolve(d, 0), r1 = resolve(d, 1);
  REQUIRE(r0.num_circles == 2);
  REQUIRE(r1.num_circles == 1);
  const auto merge = edge_map(d, 0, 0, EdgeDirection::Forward);
  CHECK(merge.kind == SaddleKind::Merge);
  const auto mm = edge_map_matrix<F2>(merge, 2, 1);
  // 1 (x) 1 -> 1, 1 (x) x -> x, x (x) x -> 0
  CHECK(mm.at(0, 0) == F2::one());
  CHECK(mm.at(1, 1) == F2::one());
  CHECK(mm.at(1, 2) == F2::one());
  CHECK(mm.column(3).empty());
  const auto split = edge_map(d, r1, resolve(d, 3), 1);
  CHECK(split.kind == SaddleKind::Split);
  const auto sm = edge_map_matrix<F2>(split, 1, 2);
  CHECK(sm.column(0).size() == 2);   // 1 -> 1 (x) x + x (x) 1
  CHECK(sm.at(3, 1) == F2::one());   // x -> x (x) x
  const auto back = edge_map(d, 0, 0, EdgeDirection::Reverse);
  CHECK(back.kind == SaddleKind::Split);
}

TEST_CASE("sign assignments") {
  for (const auto& e : fixtures()) {
    const auto d = parse_pd(e.pd);
    const auto s = sign_assignment(d);
    CHECK_MESSAGE(is_sign_assignment(d, s), e.name);
    const auto ends = arc_ends(d);
    for (int a : d.arcs()) {
      const auto& x = ends[a];
      if (x.tail_crossing < 0) continue;
      CHECK(s[x.tail_crossing] * s[x.head_crossing] == beta(x));
    }
  }
  const auto d = fixture("trefoil");
  auto s = sign_assignment(d);
  s[0] = -s[0];
  CHECK_FALSE(is_sign_assignment(d, s));
}

TEST_CASE("weights") {
  const auto w = default_weights<GF4>(3);
  CHECK(w[0] != w[1]);
  CHECK(w[1] != w[2]);
  CHECK(w[0] != w[2]);
  CHECK_THROWS_AS(default_weights<F2>(3), WeightFieldMismatch);
  const auto d = fixture("whitehead");
  const auto s = sign_assignment(d);
  const std::vector<Rational> q{Rational::from_int(1), Rational::from_int(3)};
  for (std::size_t i = 0; i < d.num_crossings(); ++i) {
    const auto c = weight_coeff(d, i, s, q);
    if (!d.crossing_info(i).mixed) CHECK(c.is_zero());
    else CHECK((c == Rational::from_int(2) || c == Rational::from_int(-2)));
  }
}
