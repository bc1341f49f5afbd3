#include "doctest.h"
#include "support.hpp"

using namespace testing;

TEST_CASE("Poincare polynomial text form") {
  PoincarePolynomial p;
  p.terms[{-2, -2}] = 1;
  p.terms[{0, 0}] = 2;
  p.terms[{1, 2}] = 1;
  CHECK(p.to_string() == "t^{-2}q^{-2} + 2 + t^{1}q^{2}");
  CHECK(PoincarePolynomial::parse(p.to_string()) == p);
  CHECK(PoincarePolynomial::parse(" t^{-2} q^{-2}+2+t^{1}q^{2} ") == p);
  CHECK(PoincarePolynomial{}.to_string() == "0");
  CHECK(PoincarePolynomial::parse("0").terms.empty());
  CHECK(p.rank() == 4);
  CHECK(PoincarePolynomial::parse("3q^{-1}").terms.at({0, -1}) == 3);
  CHECK_THROWS(PoincarePolynomial::parse("t^{x}"));
  const auto chi = p.euler_characteristic();
  CHECK(chi.at(-2) == 1);
  CHECK(chi.at(0) == 2);
  CHECK(chi.at(2) == -1);
}

TEST_CASE("page gradings convert to (t, q)") {
  Page page;
  page.table[{-2, 0}] = 1;  // l = -2, g = 0
  page.table[{0, -1}] = 2;
  const auto p = page.poincare(2);
  CHECK(p.terms.at({0, 2}) == 1);
  CHECK(p.terms.at({0, 0}) == 2);
  CHECK(page.rank() == 3);
}

TEST_CASE("Khovanov homology of small knots") {
  CHECK(khovanov<Rational>(fixture("unknot")) == PoincarePolynomial::parse("q^{-1} + q^{1}"));
  CHECK(khovanov<Rational>(fixture("curl_positive")) == PoincarePolynomial::parse("q^{-1} + q^{1}"));
  CHECK(khovanov<Rational>(fixture("curl_negative")) == PoincarePolynomial::parse("q^{-1} + q^{1}"));
  const auto fig8 = khovanov<Rational>(fixture("figure_eight"));
  CHECK(fig8.rank() == 6);
  CHECK(fig8.euler_characteristic() == khovanov<F2>(fixture("figure_eight")).euler_characteristic());
  CHECK(khovanov<Rational>(fixture("hopf")) == PoincarePolynomial::parse("1 + q^{2} + t^{2}q^{4} + t^{2}q^{6}"));
}

TEST_CASE("cancellation agrees with dense homology") {
  for (const char* name : {"trefoil", "figure_eight", "hopf", "whitehead", "solomon", "borromean", "knot_6_2"}) {
    const auto d = fixture(name);
    CHECK_MESSAGE(khovanov<Rational>(d) == dense_khovanov<Rational>(d), name);
    CHECK_MESSAGE(khovanov<F2>(d) == dense_khovanov<F2>(d), name);
    CHECK_MESSAGE(khovanov<GF4>(d) == dense_khovanov<GF4>(d), name);
  }
}

TEST_CASE("state sum") {
  for (const char* name : {"trefoil", "hopf", "borromean", "knot_6_2", "chain_3", "unlink_3"}) {
    const auto d = fixture(name);
    CHECK_MESSAGE(to_laurent(jones_statesum(d)) == bracket_oracle(d), name);
  }
  CHECK(laurent_to_string(jones_statesum(fixture("trefoil"))) == "q^{1} + q^{3} + q^{5} - q^{9}");
}

TEST_CASE("direct and cancellation pages agree") {
  for (const char* name : {"hopf", "whitehead", "solomon", "link_6a1", "borromean"}) {
    const auto d = fixture(name);
    const int m = d.num_components();
    with_char2_field(m, [&]<Field F>() {
      const auto c = build(d, default_weights<F>(m));
      CHECK_MESSAGE(pages_direct(c).pages == pages_by_cancellation(c).pages, name);
    });
  }
}

TEST_CASE("oracle cap") {
  const auto c = build(fixture("2n13_8862"), std::vector<F2>{F2::zero(), F2::one()});
  CHECK_THROWS(pages_direct(c, 100));
}

TEST_CASE("first page is Khovanov homology") {
  for (const char* name : {"hopf", "whitehead", "2n12_1705"}) {
    const auto d = fixture(name);
    const auto s = pages_by_cancellation(build(d, default_weights<F2>(2)));
    CHECK_MESSAGE(s.pages.front().poincare(2) == khovanov<F2>(d), name);
    CHECK(s.pages.front().index == 1);
    for (std::size_t k = 1; k < s.pages.size(); ++k) {
      CHECK(s.pages[k].rank() <= s.pages[k - 1].rank());
      CHECK(s.pages[k].index == static_cast<int>(k) + 1);
    }
  }
}

TEST_CASE("collapse page") {
  SpectralSequence s;
  Page a, b, c;
  a.table[{0, 0}] = 4;
  b.index = 2;
  b.table[{0, 0}] = 2;
  c.index = 3;
  c.table[{0, 0}] = 2;
  s.pages = {a};
  CHECK(collapse_page(s) == 0);
  s.pages = {a, b};
  CHECK(collapse_page(s) == 1);
  const auto w = pages_by_cancellation(build(fixture("whitehead"), std::vector<F2>{F2::zero(), F2::one()}));
  CHECK(collapse_page(w) == static_cast<int>(w.pages.size()) - 1);
}
