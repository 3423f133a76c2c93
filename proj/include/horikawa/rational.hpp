#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>

namespace horikawa {

using Int = boost::multiprecision::cpp_int;

// Exact rational scalar: always reduced, denominator > 0.
using Rational = boost::multiprecision::cpp_rational;

// Canonical "num/den" rendering, also for integers ("5/1").
std::string repr(const Rational& q);

// Normalizing constructor accepting any nonzero denominator sign.
Rational make_rational(const Int& num, const Int& den);

// Parses "3", "-7", "2/5", "-2/5". Throws domain_error on malformed input
// or zero denominator.
Rational parse_rational(const std::string& text);

// Deterministic small-integer source. std::mt19937_64 has a fully specified
// sequence; we avoid std distributions, whose output is
// implementation-defined, by reducing the raw word directly.
class SmallRng {
 public:
  explicit SmallRng(std::uint64_t seed) : state_(seed ? seed : 0x9e3779b97f4a7c15ULL) {}

  std::uint64_t next() {
    // splitmix64; stable across platforms and simple enough to not matter.
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // Uniform-ish integer in [lo, hi]; the modulo bias is irrelevant for the
  // tiny ranges used here.
  int uniform(int lo, int hi) {
    return lo + static_cast<int>(next() % static_cast<std::uint64_t>(hi - lo + 1));
  }

  // Nonzero integer in [-bound, bound].
  int nonzero(int bound) {
    int v = uniform(1, bound);
    return (next() & 1) ? v : -v;
  }

 private:
  std::uint64_t state_;
};

}  // namespace horikawa
