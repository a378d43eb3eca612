#pragma once

#include <random>

#include "sextic/rational.hpp"

namespace sextic::testing {

// Small random rationals from a fixed-seed engine.
class RationalSource {
 public:
  explicit RationalSource(std::uint64_t seed, long num_bound = 30, long den_bound = 12)
      : rng_(seed), num_(-num_bound, num_bound), den_(1, den_bound) {}

  Rational next() { return Rational(num_(rng_), den_(rng_)); }
  Rational nonzero() {
    for (;;) {
      Rational q = next();
      if (!q.is_zero()) return q;
    }
  }
  long integer(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng_); }
  std::mt19937_64& engine() { return rng_; }

 private:
  std::mt19937_64 rng_;
  std::uniform_int_distribution<long> num_;
  std::uniform_int_distribution<long> den_;
};

}  // namespace sextic::testing
