#pragma once

#include <cstddef>
#include <initializer_list>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "sextic/rational.hpp"

namespace sextic {

// Dense univariate polynomial over Q, coefficients lowest degree first.
// The leading coefficient is nonzero; the zero polynomial has no coefficients
// and degree -1.
class UniPoly {
 public:
  UniPoly() = default;
  UniPoly(std::vector<Rational> coeffs);  // NOLINT(google-explicit-constructor)
  UniPoly(std::initializer_list<Rational> coeffs);
  explicit UniPoly(const Rational& constant);

  static UniPoly monomial(const Rational& c, std::size_t k);
  static UniPoly x() { return monomial(Rational(1), 1); }

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_constant() const { return c_.size() <= 1; }

  // Zero beyond the degree.
  const Rational& coeff(std::size_t i) const;
  const Rational& leading() const;
  const std::vector<Rational>& coefficients() const { return c_; }

  Rational operator()(const Rational& x) const;

  UniPoly derivative() const;
  UniPoly monic() const;
  // p(x + r).
  UniPoly shift(const Rational& r) const;
  // x^deg * p(1/x).
  UniPoly reversed() const;
  UniPoly compose(const UniPoly& inner) const;
  // p(k x).
  UniPoly scale_variable(const Rational& k) const;

  UniPoly& operator+=(const UniPoly& o);
  UniPoly& operator-=(const UniPoly& o);
  UniPoly& operator*=(const UniPoly& o);
  UniPoly& operator*=(const Rational& k);
  UniPoly& operator/=(const Rational& k);

  friend UniPoly operator+(UniPoly a, const UniPoly& b) { return a += b; }
  friend UniPoly operator-(UniPoly a, const UniPoly& b) { return a -= b; }
  friend UniPoly operator*(UniPoly a, const UniPoly& b) { return a *= b; }
  friend UniPoly operator*(UniPoly a, const Rational& k) { return a *= k; }
  friend UniPoly operator*(const Rational& k, UniPoly a) { return a *= k; }
  friend UniPoly operator/(UniPoly a, const Rational& k) { return a /= k; }
  friend UniPoly operator-(const UniPoly& a);
  friend UniPoly operator/(const UniPoly& a, const UniPoly& b);
  friend UniPoly operator%(const UniPoly& a, const UniPoly& b);
  friend bool operator==(const UniPoly& a, const UniPoly& b) { return a.c_ == b.c_; }

  std::string str(char var = 'x') const;

 private:
  void trim();
  std::vector<Rational> c_;
};

std::ostream& operator<<(std::ostream& os, const UniPoly& p);

UniPoly pow(const UniPoly& base, unsigned exponent);

// Quotient and remainder; b must be nonzero.
std::pair<UniPoly, UniPoly> divmod(const UniPoly& a, const UniPoly& b);

// Monic gcd (zero if both are zero).
UniPoly gcd(const UniPoly& a, const UniPoly& b);

struct Xgcd {
  UniPoly g;  // monic
  UniPoly s;
  UniPoly t;  // s*a + t*b == g
};
Xgcd xgcd(const UniPoly& a, const UniPoly& b);

Rational resultant(const UniPoly& a, const UniPoly& b);

// (-1)^(n(n-1)/2) Res(p, p') / lc(p); degree >= 1.
Rational discriminant(const UniPoly& p);

// 18abcd - 4b^3 d + b^2 c^2 - 4ac^3 - 27a^2 d^2 for a x^3 + b x^2 + c x + d,
// over any commutative ring type.
template <class R>
R cubic_discriminant(const R& a, const R& b, const R& c, const R& d) {
  return R(18) * a * b * c * d - R(4) * b * b * b * d + b * b * c * c - R(4) * a * c * c * c -
         R(27) * a * a * d * d;
}

// Rejects degree != 3.
Rational cubic_discriminant(const UniPoly& p);

struct SquarefreeFactor {
  UniPoly factor;  // monic, square-free
  unsigned multiplicity = 0;
};
struct SquarefreeDecomposition {
  Rational content;  // leading coefficient of the input
  std::vector<SquarefreeFactor> factors;
};
// Yun's algorithm; p = content * prod factor^multiplicity. Zero is rejected.
SquarefreeDecomposition squarefree_decomposition(const UniPoly& p);
UniPoly reassemble(const SquarefreeDecomposition& d);

// Integer primitive multiple: p = scale * sum coeffs[i] x^i with integer
// coprime coeffs and positive leading coefficient.
struct IntegerPoly {
  std::vector<BigInt> coeffs;
  Rational scale;
};
IntegerPoly primitive_integer(const UniPoly& p);
UniPoly from_integers(const std::vector<BigInt>& coeffs);

// Half-open interval (lo, hi] holding exactly one real root; lo == hi marks
// an exactly known rational root.
struct RootInterval {
  Rational lo;
  Rational hi;
};

// Sturm-sequence isolation of the distinct real roots, in increasing order.
std::vector<RootInterval> isolate_real_roots(const UniPoly& p);

// Bisect until hi - lo <= width (or an exact root is hit). p square-free.
RootInterval refine_root(const UniPoly& p, RootInterval iv, const Rational& width);

// Distinct rational roots, increasing.
std::vector<Rational> rational_roots(const UniPoly& p);

bool has_rational_root(const UniPoly& p);

// Newton interpolation through (xs[i], ys[i]) with distinct xs.
UniPoly interpolate(const std::vector<Rational>& xs, const std::vector<Rational>& ys);

}  // namespace sextic
