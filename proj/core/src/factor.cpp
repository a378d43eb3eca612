#include "sextic/factor.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace sextic {

namespace {

constexpr std::uint32_t kSieveLimit = 1'000'000;

std::vector<std::uint32_t> sieve(std::uint32_t limit) {
  std::vector<bool> composite(limit + 1, false);
  std::vector<std::uint32_t> primes;
  for (std::uint32_t i = 2; i <= limit; ++i) {
    if (composite[i]) continue;
    primes.push_back(i);
    for (std::uint64_t j = std::uint64_t{i} * i; j <= limit; j += i) composite[j] = true;
  }
  return primes;
}

// Brent's variant of Pollard rho. n is odd, composite, with no small factors.
BigInt pollard_brent(const BigInt& n) {
  for (unsigned long c = 1;; ++c) {
    BigInt y = 2, x, g = 1, q = 1, ys;
    const unsigned long m = 128;
    unsigned long r = 1;
    auto f = [&](const BigInt& v) {
      BigInt out = v * v + c;
      mpz_mod(out.get_mpz_t(), out.get_mpz_t(), n.get_mpz_t());
      return out;
    };
    do {
      x = y;
      for (unsigned long i = 0; i < r; ++i) y = f(y);
      unsigned long k = 0;
      do {
        ys = y;
        const unsigned long steps = std::min(m, r - k);
        for (unsigned long i = 0; i < steps; ++i) {
          y = f(y);
          BigInt diff = x - y;
          q = q * abs(diff);
          mpz_mod(q.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
        }
        mpz_gcd(g.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
        k += m;
      } while (k < r && g == 1);
      r *= 2;
    } while (g == 1);
    if (g == n) {
      do {
        ys = f(ys);
        BigInt diff = abs(BigInt(x - ys));
        mpz_gcd(g.get_mpz_t(), diff.get_mpz_t(), n.get_mpz_t());
      } while (g == 1);
    }
    if (g != n) return g;
  }
}

void split(const BigInt& n, std::map<BigInt, unsigned>& out) {
  if (n == 1) return;
  if (is_probable_prime(n)) {
    ++out[n];
    return;
  }
  if (mpz_perfect_square_p(n.get_mpz_t())) {
    BigInt r;
    mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
    std::map<BigInt, unsigned> half;
    split(r, half);
    for (auto& [p, e] : half) out[p] += 2 * e;
    return;
  }
  const BigInt d = pollard_brent(n);
  split(d, out);
  split(BigInt(n / d), out);
}

}  // namespace

const std::vector<std::uint32_t>& small_primes() {
  static const std::vector<std::uint32_t> primes = sieve(kSieveLimit);
  return primes;
}

bool is_probable_prime(const BigInt& n) {
  if (n < 2) return false;
  return mpz_probab_prime_p(n.get_mpz_t(), 30) != 0;
}

std::vector<PrimePower> factorize(const BigInt& n) {
  if (n == 0) throw std::invalid_argument("factorize: zero");
  BigInt rest = abs(n);
  std::vector<PrimePower> result;
  for (std::uint32_t p : small_primes()) {
    if (rest == 1) break;
    if (BigInt(p) * p > rest) break;
    if (mpz_divisible_ui_p(rest.get_mpz_t(), p) == 0) continue;
    unsigned e = 0;
    while (mpz_divisible_ui_p(rest.get_mpz_t(), p) != 0) {
      mpz_divexact_ui(rest.get_mpz_t(), rest.get_mpz_t(), p);
      ++e;
    }
    result.push_back({BigInt(p), e});
  }
  if (rest != 1) {
    std::map<BigInt, unsigned> big;
    split(rest, big);
    for (auto& [p, e] : big) result.push_back({p, e});
  }
  std::sort(result.begin(), result.end(),
            [](const PrimePower& a, const PrimePower& b) { return a.prime < b.prime; });
  return result;
}

std::vector<BigInt> prime_divisors(const BigInt& n) {
  std::vector<BigInt> out;
  for (const auto& pp : factorize(n)) out.push_back(pp.prime);
  return out;
}

bool is_squarefree(const BigInt& n) {
  if (n == 0) return false;
  for (const auto& pp : factorize(n)) {
    if (pp.exponent > 1) return false;
  }
  return true;
}

BigInt squarefree_part(const Rational& q) {
  if (q.is_zero()) throw std::invalid_argument("squarefree_part: zero");
  // num * den has the same square class as num / den.
  const BigInt prod = q.num() * q.den();
  BigInt s = 1;
  for (const auto& pp : factorize(prod)) {
    if (pp.exponent % 2 == 1) s *= pp.prime;
  }
  return q.sign() < 0 ? BigInt(-s) : s;
}

unsigned valuation(const BigInt& n, const BigInt& p) {
  if (n == 0) throw std::invalid_argument("valuation of zero");
  BigInt r = n;
  unsigned e = 0;
  while (mpz_divisible_p(r.get_mpz_t(), p.get_mpz_t()) != 0) {
    mpz_divexact(r.get_mpz_t(), r.get_mpz_t(), p.get_mpz_t());
    ++e;
  }
  return e;
}

}  // namespace sextic
