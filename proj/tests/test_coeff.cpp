#include <random>
#include <set>

#include "doctest.h"
#include "support.hpp"

using namespace testing;

namespace {

template <Field F>
F random_element(std::mt19937& rng);

template <>
F2 random_element<F2>(std::mt19937& rng) {
  return F2::from_int(rng());
}
template <>
GF16 random_element<GF16>(std::mt19937& rng) {
  return GF16{static_cast<std::uint16_t>(rng() % 16)};
}
template <>
GF256 random_element<GF256>(std::mt19937& rng) {
  return GF256{static_cast<std::uint16_t>(rng() % 256)};
}
template <>
GF65536 random_element<GF65536>(std::mt19937& rng) {
  return GF65536{static_cast<std::uint16_t>(rng() % 65536)};
}
template <>
Rational random_element<Rational>(std::mt19937& rng) {
  return Rational(static_cast<long>(rng() % 7) - 3, static_cast<long>(rng() % 3) + 1);
}

template <Field F>
void check_axioms() {
  std::mt19937 rng(7);
  for (int k = 0; k < 500; ++k) {
    const F a = random_element<F>(rng), b = random_element<F>(rng), c = random_element<F>(rng);
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a + F::zero() == a);
    CHECK(a * F::one() == a);
    CHECK(a + (-a) == F::zero());
    CHECK(a - b == a + (-b));
    if (!a.is_zero()) CHECK(a * a.inv() == F::one());
  }
  CHECK_THROWS_AS(F::zero().inv(), DivisionByZero);
}

template <Field F>
SparseMatrix<F> random_matrix(std::mt19937& rng, std::size_t rows, std::size_t cols, int density) {
  std::vector<std::tuple<Index, Index, F>> t;
  for (Index r = 0; r < rows; ++r)
    for (Index c = 0; c < cols; ++c)
      if (static_cast<int>(rng() % 100) < density) t.emplace_back(r, c, random_element<F>(rng));
  return SparseMatrix<F>::from_triplets(rows, cols, std::move(t));
}

template <Field F>
void check_linear_algebra() {
  std::mt19937 rng(11);
  for (int k = 0; k < 40; ++k) {
    const std::size_t rows = 1 + rng() % 12, cols = 1 + rng() % 12;
    auto m = random_matrix<F>(rng, rows, cols, 10 + static_cast<int>(rng() % 50));
    // Force some dependent columns.
    if (cols >= 3) {
      m.column(cols - 1) = m.column(0);
      m.column(cols - 1).axpy(F::one(), m.column(1));
    }
    const std::size_t r = rank(m);
    CHECK(r == dense_rank(to_dense(m)));
    const auto ker = kernel_basis(m);
    CHECK(ker.size() == cols - r);
    for (const auto& v : ker) CHECK(m.apply(v).empty());
    CHECK(span_dim<F>(cols, {ker}) == ker.size());
    CHECK(image_basis(m).size() == r);
    CHECK(span_dim<F>(rows, {image_basis(m), m.columns()}) == r);
    CHECK(rank(m.transpose()) == r);
  }
}

}  // namespace

TEST_CASE("field axioms") {
  check_axioms<F2>();
  check_axioms<GF16>();
  check_axioms<GF256>();
  check_axioms<GF65536>();
  check_axioms<Rational>();
}

TEST_CASE("GF(16) multiplication matches carry-less products") {
  for (std::uint32_t a = 0; a < 16; ++a)
    for (std::uint32_t b = 0; b < 16; ++b) {
      std::uint32_t p = 0;
      for (int i = 0; i < 4; ++i)
        if ((b >> i) & 1) p ^= a << i;
      for (int i = 7; i >= 4; --i)
        if ((p >> i) & 1) p ^= GF16::modulus << (i - 4);
      CHECK((GF16{static_cast<std::uint16_t>(a)} * GF16{static_cast<std::uint16_t>(b)}).v == p);
    }
}

TEST_CASE("field enumeration") {
  for (std::size_t k = 0; k < 4; ++k)
    for (std::size_t j = 0; j < k; ++j) CHECK(GF4::enumerate(j) != GF4::enumerate(k));
  CHECK_THROWS_AS(GF4::enumerate(4), WeightFieldMismatch);
  std::set<std::uint16_t> seen;
  for (std::size_t k = 0; k < 256; ++k) seen.insert(GF256::enumerate(k).v);
  CHECK(seen.size() == 256);
  CHECK_THROWS_AS(F2::enumerate(2), WeightFieldMismatch);
  CHECK(Rational::enumerate(5) == Rational::from_int(5));
  CHECK(GF16::cardinality() == 16);
  CHECK(Rational::cardinality() == 0);
}

TEST_CASE("parsing field elements and field names") {
  CHECK(Rational::parse("3/4") * Rational::parse("4/3") == Rational::one());
  CHECK(Rational::parse("-2") == Rational::from_int(-2));
  CHECK(F2::parse("1") == F2::one());
  CHECK(F2::parse("0") == F2::zero());
  CHECK(FieldSpec::parse("f2").kind == FieldKind::F2);
  CHECK(FieldSpec::parse("q").kind == FieldKind::Q);
  const auto g = FieldSpec::parse("gf2k:4");
  CHECK(g.kind == FieldKind::GF2k);
  CHECK(g.degree == 4);
  CHECK(g.cardinality() == 16);
  CHECK(FieldSpec::parse(g.to_string()) == g);
  CHECK_THROWS(FieldSpec::parse("gf2k:5"));
  CHECK_THROWS(FieldSpec::parse("z"));
}

TEST_CASE("sparse rank, kernel and span against dense elimination") {
  check_linear_algebra<F2>();
  check_linear_algebra<GF16>();
  check_linear_algebra<GF256>();
  check_linear_algebra<Rational>();
}

TEST_CASE("sparse matrix arithmetic") {
  std::mt19937 rng(3);
  const auto a = random_matrix<Rational>(rng, 5, 4, 40), b = random_matrix<Rational>(rng, 4, 6, 40);
  const auto p = a * b;
  const auto da = to_dense(a), db = to_dense(b), dp = to_dense(p);
  for (std::size_t i = 0; i < 5; ++i)
    for (std::size_t j = 0; j < 6; ++j) {
      Rational s;
      for (std::size_t k = 0; k < 4; ++k) s += da[i][k] * db[k][j];
      CHECK(dp[i][j] == s);
    }
  CHECK((a - a).is_zero());
  CHECK(a + a - a == a);
  CHECK(SparseMatrix<Rational>::identity(4) * b == b);
  CHECK(a.transpose().transpose() == a);
  CHECK_THROWS(a * a);
}
