#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <string>
#include <vector>

#include "wcoset/errors.hpp"

namespace wcoset {

// Plain-value flavors (no expression templates): arithmetic results convert
// where a number is expected, which exact code leans on heavily.
using Int = boost::multiprecision::number<boost::multiprecision::cpp_int_backend<>,
                                          boost::multiprecision::et_off>;
using Rat = boost::multiprecision::number<
    boost::multiprecision::backends::rational_adaptor<boost::multiprecision::cpp_int_backend<>>,
    boost::multiprecision::et_off>;

inline std::string to_string(const Int& x) { return x.str(); }

// Canonical "p/q" (plain "p" when q == 1), matching the serialization schema.
inline std::string to_string(const Rat& x) {
  if (denominator(x) == 1) return numerator(x).str();
  return numerator(x).str() + "/" + denominator(x).str();
}

Rat parse_rat(const std::string& s);
Int parse_int(const std::string& s);

inline bool is_integer(const Rat& x) { return denominator(x) == 1; }

inline Int floor_rat(const Rat& x) {
  Int q = numerator(x) / denominator(x);
  if (numerator(x) < 0 && q * denominator(x) != numerator(x)) --q;
  return q;
}

inline Int ceil_rat(const Rat& x) { return -floor_rat(-x); }

// Largest integer s >= 0 with s^2 <= x; x must be >= 0.
inline Int isqrt_floor(const Int& x) {
  if (x < 0) fail(ErrorKind::Internal, "isqrt of negative");
  return boost::multiprecision::sqrt(x);
}

// Rational upper bound on sqrt(x) for x >= 0: exact enough for enumeration
// windows, always >= the true root.
inline Rat sqrt_upper(const Rat& x) {
  if (x < 0) fail(ErrorKind::Internal, "sqrt_upper of negative");
  const Int n = numerator(x), d = denominator(x);
  return Rat(isqrt_floor(n * d) + 1, d);
}

// Deterministic 64-bit generator (xorshift-based splitmix); used instead of
// std::uniform_int_distribution so that seeded runs are identical on every
// platform.
struct Rng {
  std::uint64_t state;
  explicit Rng(std::uint64_t seed) : state(seed) {}
  std::uint64_t next() {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }
  // uniform in [0, n), n > 0; slight modulo bias is irrelevant here and the
  // result is platform-stable, which matters more.
  std::uint64_t below(std::uint64_t n) { return next() % n; }
  long long range(long long lo, long long hi) {  // inclusive
    return lo + static_cast<long long>(below(static_cast<std::uint64_t>(hi - lo + 1)));
  }
};

}  // namespace wcoset
