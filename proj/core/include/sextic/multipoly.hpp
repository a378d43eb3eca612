#pragma once

#include <array>
#include <concepts>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <iosfwd>
#include <map>
#include <string>
#include <string_view>
#include <utility>

#include "sextic/rational.hpp"
#include "sextic/unipoly.hpp"

namespace sextic {

// Global variable order used by every MultiPoly.
enum class Var : std::uint8_t { A, B, T, U, D, t, u, d, X, Y, a, b, c, m, n, s, x, y };
inline constexpr std::size_t kVarCount = 18;

std::string_view var_name(Var v);

using Exponents = std::array<std::int16_t, kVarCount>;

// Sparse polynomial over Q in the global variables. Exponents may be
// negative (Laurent monomials) so rational substitutions such as
// T = -u/t can be carried out and cleared later.
class MultiPoly {
 public:
  MultiPoly() = default;
  MultiPoly(const Rational& c);  // NOLINT(google-explicit-constructor)
  template <std::integral I>
  MultiPoly(I c) : MultiPoly(Rational(c)) {}  // NOLINT(google-explicit-constructor)

  static MultiPoly var(Var v, int power = 1);
  static MultiPoly monomial(const Rational& c, std::initializer_list<std::pair<Var, int>> powers);
  static MultiPoly from_unipoly(const UniPoly& p, Var v);

  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }
  const std::map<Exponents, Rational>& terms() const { return terms_; }

  bool uses(Var v) const;
  int degree_in(Var v) const;
  int min_degree_in(Var v) const;

  // Terms containing v^k, with v removed.
  MultiPoly coefficient_of(Var v, int k) const;

  // Replace v by value. Negative powers of v need a single-term value.
  MultiPoly substitute(Var v, const MultiPoly& value) const;

  // Replace v^2 by value repeatedly, leaving v to degree <= 1.
  MultiPoly reduce_square(Var v, const MultiPoly& value) const;

  // Fully evaluate; every variable in use must be bound.
  Rational evaluate(std::initializer_list<std::pair<Var, Rational>> bindings) const;
  Rational evaluate(const std::map<Var, Rational>& bindings) const;

  // Bind some variables, keep the others symbolic.
  MultiPoly bind(const std::map<Var, Rational>& bindings) const;

  // Requires v to be the only variable, with nonnegative exponents.
  UniPoly to_unipoly(Var v) const;

  // Multiply by the monomial with the given exponents (may be negative).
  MultiPoly shifted(const Exponents& e) const;

  MultiPoly& operator+=(const MultiPoly& o);
  MultiPoly& operator-=(const MultiPoly& o);
  MultiPoly& operator*=(const MultiPoly& o);

  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
  friend MultiPoly operator-(const MultiPoly& a);
  friend bool operator==(const MultiPoly& a, const MultiPoly& b) { return a.terms_ == b.terms_; }

  std::string str() const;

 private:
  void add_term(const Exponents& e, const Rational& c);
  std::map<Exponents, Rational> terms_;
};

std::ostream& operator<<(std::ostream& os, const MultiPoly& p);

MultiPoly pow(const MultiPoly& base, unsigned exponent);

// Exact sparse equality after canonicalization.
bool multipoly_equal(const MultiPoly& p, const MultiPoly& q);

}  // namespace sextic
