#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "sextic/rational.hpp"

namespace sextic {

struct PrimePower {
  BigInt prime;
  unsigned exponent = 0;
};

// Primes below 10^6, generated once.
const std::vector<std::uint32_t>& small_primes();

bool is_probable_prime(const BigInt& n);

// Factorization of |n| into ascending prime powers. n == 0 is rejected;
// |n| == 1 gives an empty list.
std::vector<PrimePower> factorize(const BigInt& n);

std::vector<BigInt> prime_divisors(const BigInt& n);

bool is_squarefree(const BigInt& n);

// The unique square-free integer s with q/s a rational square; keeps the
// sign of q. Zero is rejected.
BigInt squarefree_part(const Rational& q);

// Exponent of p in n (n != 0).
unsigned valuation(const BigInt& n, const BigInt& p);

}  // namespace sextic
