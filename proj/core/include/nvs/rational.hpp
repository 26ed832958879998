#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <random>
#include <string>

namespace nvs {

// Exact arbitrary-precision rationals. gmp keeps them canonical
// (gcd(num,den)=1, den>0) after every arithmetic operation.
using Rational = mpq_class;

inline Rational rat(long n, long d = 1) {
  Rational q(n, d);
  q.canonicalize();
  return q;
}

inline std::string to_string(const Rational& q) { return q.get_str(); }

// Deterministic stream of small rationals for randomized identity checks.
// mt19937_64 is bit-reproducible across platforms; std::uniform_* is not,
// so draw raw words and reduce by hand.
class RationalSampler {
 public:
  explicit RationalSampler(std::uint64_t seed) : rng_(seed) {}

  std::uint64_t next_u64() { return rng_(); }

  // uniform in [0, bound)
  std::uint64_t next_below(std::uint64_t bound) { return rng_() % bound; }

  // numerator in [-max_num, max_num], denominator in [1, max_den]
  Rational next_rational(long max_num = 20, long max_den = 8) {
    long num = static_cast<long>(rng_() % (2 * max_num + 1)) - max_num;
    long den = static_cast<long>(rng_() % max_den) + 1;
    Rational q(num, den);
    q.canonicalize();
    return q;
  }

  Rational next_nonzero(long max_num = 20, long max_den = 8) {
    Rational q = next_rational(max_num, max_den);
    while (q == 0) q = next_rational(max_num, max_den);
    return q;
  }

 private:
  std::mt19937_64 rng_;
};

}  // namespace nvs
