#include "linksplit/field.hpp"

#include <charconv>
#include <mutex>
#include <stdexcept>

namespace linksplit {

namespace {

long parse_long(std::string_view s, std::string_view what) {
  long value = 0;
  const char* first = s.data();
  const char* last = s.data() + s.size();
  if (!s.empty() && *first == '+') ++first;
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last || first == last) {
    throw Error("cannot parse " + std::string(what) + " '" + std::string(s) + "'");
  }
  return value;
}

}  // namespace

F2 F2::enumerate(std::size_t k) {
  if (k >= 2) throw WeightFieldMismatch("f2 has only two elements");
  return F2{static_cast<std::uint8_t>(k)};
}

F2 F2::parse(std::string_view s) { return from_int(parse_long(s, "f2 element")); }

namespace detail {

std::uint32_t GF2kTables::slow_mul(std::uint32_t a, std::uint32_t b, int k) {
  const std::uint32_t mod = gf2k_modulus(k);
  std::uint32_t r = 0;
  while (b) {
    if (b & 1u) r ^= a;
    b >>= 1;
    a <<= 1;
    if (a >> k) a ^= mod;
  }
  return r;
}

GF2kTables::GF2kTables(int k_) : k(k_) {
  const std::uint32_t size = 1u << k;
  order = size - 1;
  exp.assign(2 * static_cast<std::size_t>(order), 0);
  log.assign(size, 0);
  // Search for a primitive element; its existence also certifies the modulus.
  for (std::uint32_t cand = 2; cand < size; ++cand) {
    std::uint32_t x = 1;
    std::uint32_t period = 0;
    do {
      x = slow_mul(x, cand, k);
      ++period;
    } while (x != 1 && period <= order);
    if (period != order) continue;
    x = 1;
    for (std::uint32_t i = 0; i < order; ++i) {
      exp[i] = static_cast<std::uint16_t>(x);
      exp[i + order] = static_cast<std::uint16_t>(x);
      log[x] = i;
      x = slow_mul(x, cand, k);
    }
    return;
  }
  throw Error("modulus for GF(2^" + std::to_string(k) + ") is not irreducible");
}

const GF2kTables& gf2k_tables(int k) {
  static const GF2kTables t2(2), t3(3), t4(4);
  switch (k) {
    case 2: return t2;
    case 3: return t3;
    case 4: return t4;
    case 8: {
      static const GF2kTables t(8);
      return t;
    }
    case 16: {
      static const GF2kTables t(16);
      return t;
    }
    default: throw Error("unsupported extension degree " + std::to_string(k));
  }
}

std::uint32_t parse_gf2k_element(std::string_view text, int k) {
  const std::uint32_t size = 1u << k;
  if (!text.empty() && text.front() == 'g') {
    long power = 1;
    if (text.size() > 1) {
      if (text.size() < 3 || text[1] != '^') throw Error("cannot parse '" + std::string(text) + "'");
      power = parse_long(text.substr(2), "exponent");
    }
    std::uint32_t r = 1;
    for (long i = 0; i < power; ++i) r = GF2kTables::slow_mul(r, 2, k);
    return r;
  }
  const long v = parse_long(text, "GF(2^k) element");
  if (v < 0 || static_cast<std::uint32_t>(v) >= size) {
    throw Error("GF(2^" + std::to_string(k) + ") element out of range: " + std::string(text));
  }
  return static_cast<std::uint32_t>(v);
}

}  // namespace detail

Rational::Rational(long num, long den) {
  if (den == 0) throw DivisionByZero();
  v = value_type(num, den);
}

Rational Rational::inv() const {
  if (v.is_zero()) throw DivisionByZero();
  return Rational{1 / v};
}

Rational Rational::parse(std::string_view s) {
  const auto slash = s.find('/');
  if (slash == std::string_view::npos) return from_int(parse_long(s, "rational"));
  return Rational(parse_long(s.substr(0, slash), "numerator"),
                  parse_long(s.substr(slash + 1), "denominator"));
}

FieldSpec FieldSpec::parse(std::string_view text) {
  if (text == "f2") return {FieldKind::F2, 1};
  if (text == "q") return {FieldKind::Q, 0};
  constexpr std::string_view prefix = "gf2k:";
  if (text.substr(0, prefix.size()) == prefix) {
    const long k = parse_long(text.substr(prefix.size()), "extension degree");
    if (k == 1) return {FieldKind::F2, 1};
    if (k == 2 || k == 3 || k == 4 || k == 8 || k == 16) return {FieldKind::GF2k, static_cast<int>(k)};
    throw Error("unsupported extension degree " + std::to_string(k) + " (use 2, 3, 4, 8 or 16)");
  }
  throw Error("unknown field '" + std::string(text) + "' (use f2, gf2k:K or q)");
}

std::string FieldSpec::to_string() const {
  switch (kind) {
    case FieldKind::F2: return "f2";
    case FieldKind::Q: return "q";
    case FieldKind::GF2k: return "gf2k:" + std::to_string(degree);
  }
  return "?";
}

std::size_t FieldSpec::cardinality() const {
  switch (kind) {
    case FieldKind::F2: return 2;
    case FieldKind::Q: return 0;
    case FieldKind::GF2k: return std::size_t{1} << degree;
  }
  return 0;
}

}  // namespace linksplit
