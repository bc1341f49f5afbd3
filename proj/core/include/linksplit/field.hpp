#pragma once

// Exact coefficient fields: F2, GF(2^k) for k in {2,3,4,8,16}, and Q.
//
// Every field type models the `Field` concept below. Characteristic-2 fields
// store elements as bit patterns of polynomials over F2 reduced modulo a fixed
// irreducible; Q wraps a GMP rational (always in lowest terms).

#include <array>
#include <concepts>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/gmp.hpp>

#include "linksplit/errors.hpp"

namespace linksplit {

template <class F>
concept Field = std::regular<F> && requires(const F a, const F b, long n, std::size_t k,
                                            std::string_view s) {
  { F::zero() } -> std::same_as<F>;
  { F::one() } -> std::same_as<F>;
  { a + b } -> std::same_as<F>;
  { a - b } -> std::same_as<F>;
  { a * b } -> std::same_as<F>;
  { -a } -> std::same_as<F>;
  { a.inv() } -> std::same_as<F>;
  { a.is_zero() } -> std::convertible_to<bool>;
  { F::from_int(n) } -> std::same_as<F>;
  { F::enumerate(k) } -> std::same_as<F>;
  { F::cardinality() } -> std::same_as<std::size_t>;  // 0 means infinite
  { F::parse(s) } -> std::same_as<F>;
  { a.to_string() } -> std::same_as<std::string>;
  { F::characteristic } -> std::convertible_to<int>;
};

// ---------------------------------------------------------------------------
// F2

struct F2 {
  static constexpr int characteristic = 2;
  static constexpr std::string_view name = "f2";

  std::uint8_t v = 0;

  static constexpr F2 zero() { return F2{0}; }
  static constexpr F2 one() { return F2{1}; }
  static constexpr F2 from_int(long n) { return F2{static_cast<std::uint8_t>(n & 1)}; }
  static F2 enumerate(std::size_t k);
  static constexpr std::size_t cardinality() { return 2; }
  static F2 parse(std::string_view s);

  constexpr bool is_zero() const { return v == 0; }
  F2 inv() const {
    if (v == 0) throw DivisionByZero();
    return *this;
  }
  std::string to_string() const { return v ? "1" : "0"; }

  friend constexpr F2 operator+(F2 a, F2 b) { return F2{static_cast<std::uint8_t>(a.v ^ b.v)}; }
  friend constexpr F2 operator-(F2 a, F2 b) { return a + b; }
  friend constexpr F2 operator*(F2 a, F2 b) { return F2{static_cast<std::uint8_t>(a.v & b.v)}; }
  constexpr F2 operator-() const { return *this; }
  F2& operator+=(F2 o) { return *this = *this + o; }
  F2& operator-=(F2 o) { return *this = *this - o; }
  F2& operator*=(F2 o) { return *this = *this * o; }
  friend constexpr bool operator==(F2, F2) = default;
};

// ---------------------------------------------------------------------------
// GF(2^K)

namespace detail {

constexpr std::uint32_t gf2k_modulus(int k) {
  switch (k) {
    case 2: return 0x7;       // x^2 + x + 1
    case 3: return 0xB;       // x^3 + x + 1
    case 4: return 0x13;      // x^4 + x + 1
    case 8: return 0x11B;     // x^8 + x^4 + x^3 + x + 1
    case 16: return 0x1100B;  // x^16 + x^12 + x^3 + x + 1
    default: return 0;
  }
}

/// Log/antilog tables for GF(2^K), built once on first use.
struct GF2kTables {
  int k = 0;
  std::uint32_t order = 0;  // 2^K - 1
  std::vector<std::uint16_t> exp;  // length 2*order
  std::vector<std::uint32_t> log;  // length 2^K, log[0] unused

  explicit GF2kTables(int k);
  static std::uint32_t slow_mul(std::uint32_t a, std::uint32_t b, int k);
};

const GF2kTables& gf2k_tables(int k);

/// Parses a bit pattern ("5"), a power of the generator ("g^3", "g") or "0"/"1".
std::uint32_t parse_gf2k_element(std::string_view text, int k);

}  // namespace detail

template <int K>
struct GF2k {
  static_assert(detail::gf2k_modulus(K) != 0, "unsupported extension degree");
  static constexpr int characteristic = 2;
  static constexpr int degree = K;
  static constexpr std::uint32_t modulus = detail::gf2k_modulus(K);

  std::uint16_t v = 0;

  static constexpr GF2k zero() { return GF2k{0}; }
  static constexpr GF2k one() { return GF2k{1}; }
  static constexpr GF2k from_int(long n) { return GF2k{static_cast<std::uint16_t>(n & 1)}; }
  /// The polynomial x, used as generator of the default weight enumeration.
  static constexpr GF2k gen() { return GF2k{2}; }
  /// 0, 1, g, g^2, ... (distinct for k < ord(g) + 1).
  /// The element whose coefficient bits spell k: 0, 1, x, x + 1, x^2, ...
  static GF2k enumerate(std::size_t k) {
    if (k >= cardinality()) throw WeightFieldMismatch("field has too few elements");
    return GF2k{static_cast<std::uint16_t>(k)};
  }
  static constexpr std::size_t cardinality() { return std::size_t{1} << K; }
  static GF2k parse(std::string_view s) {
    return GF2k{static_cast<std::uint16_t>(detail::parse_gf2k_element(s, K))};
  }

  constexpr bool is_zero() const { return v == 0; }
  GF2k inv() const {
    if (v == 0) throw DivisionByZero();
    const auto& t = detail::gf2k_tables(K);
    return GF2k{t.exp[(t.order - t.log[v]) % t.order]};
  }
  std::string to_string() const { return std::to_string(v); }

  friend constexpr GF2k operator+(GF2k a, GF2k b) {
    return GF2k{static_cast<std::uint16_t>(a.v ^ b.v)};
  }
  friend constexpr GF2k operator-(GF2k a, GF2k b) { return a + b; }
  friend GF2k operator*(GF2k a, GF2k b) {
    if (a.v == 0 || b.v == 0) return zero();
    const auto& t = detail::gf2k_tables(K);
    return GF2k{t.exp[t.log[a.v] + t.log[b.v]]};
  }
  constexpr GF2k operator-() const { return *this; }
  GF2k& operator+=(GF2k o) { return *this = *this + o; }
  GF2k& operator-=(GF2k o) { return *this = *this - o; }
  GF2k& operator*=(GF2k o) { return *this = *this * o; }
  friend constexpr bool operator==(GF2k, GF2k) = default;
};

using GF4 = GF2k<2>;
using GF8 = GF2k<3>;
using GF16 = GF2k<4>;
using GF256 = GF2k<8>;
using GF65536 = GF2k<16>;

// ---------------------------------------------------------------------------
// Q

struct Rational {
  using value_type = boost::multiprecision::mpq_rational;
  static constexpr int characteristic = 0;
  static constexpr std::string_view name = "q";

  value_type v;

  Rational() = default;
  explicit Rational(value_type x) : v(std::move(x)) {}
  Rational(long num, long den);

  static Rational zero() { return Rational{}; }
  static Rational one() { return Rational{value_type(1)}; }
  static Rational from_int(long n) { return Rational{value_type(n)}; }
  static Rational enumerate(std::size_t k) { return from_int(static_cast<long>(k)); }
  static constexpr std::size_t cardinality() { return 0; }
  static Rational parse(std::string_view s);

  bool is_zero() const { return v.is_zero(); }
  Rational inv() const;
  std::string to_string() const { return v.str(); }

  friend Rational operator+(const Rational& a, const Rational& b) { return Rational{a.v + b.v}; }
  friend Rational operator-(const Rational& a, const Rational& b) { return Rational{a.v - b.v}; }
  friend Rational operator*(const Rational& a, const Rational& b) { return Rational{a.v * b.v}; }
  Rational operator-() const { return Rational{-v}; }
  Rational& operator+=(const Rational& o) { v += o.v; return *this; }
  Rational& operator-=(const Rational& o) { v -= o.v; return *this; }
  Rational& operator*=(const Rational& o) { v *= o.v; return *this; }
  friend bool operator==(const Rational& a, const Rational& b) { return a.v == b.v; }
};

static_assert(Field<F2>);
static_assert(Field<GF4>);
static_assert(Field<GF65536>);
static_assert(Field<Rational>);

// ---------------------------------------------------------------------------
// Runtime field selection

enum class FieldKind { F2, GF2k, Q };

struct FieldSpec {
  FieldKind kind = FieldKind::F2;
  int degree = 1;  // extension degree for GF2k

  /// Accepts "f2", "gf2k:K" (K in {2,3,4,8,16}) and "q".
  static FieldSpec parse(std::string_view text);
  std::string to_string() const;
  /// Number of elements, 0 for Q.
  std::size_t cardinality() const;
  friend bool operator==(const FieldSpec&, const FieldSpec&) = default;
};

/// Calls `fn.template operator()<F>()` with the field type selected by `spec`.
template <class Fn>
decltype(auto) visit_field(const FieldSpec& spec, Fn&& fn) {
  switch (spec.kind) {
    case FieldKind::F2: return fn.template operator()<F2>();
    case FieldKind::Q: return fn.template operator()<Rational>();
    case FieldKind::GF2k:
      switch (spec.degree) {
        case 2: return fn.template operator()<GF4>();
        case 3: return fn.template operator()<GF8>();
        case 4: return fn.template operator()<GF16>();
        case 8: return fn.template operator()<GF256>();
        case 16: return fn.template operator()<GF65536>();
        default: break;
      }
      break;
  }
  throw Error("unsupported field " + spec.to_string());
}

}  // namespace linksplit
