#pragma once

#include <array>
#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "sextic/rational.hpp"
#include "sextic/unipoly.hpp"

namespace sextic {

// Coefficient field of Q itself, for generic curve code.
struct RationalField {
  using Element = Rational;
  Rational embed(const Rational& q) const { return q; }
};

std::size_t height_bits(const Rational& q);

namespace detail {
struct CubicFieldData;
struct SexticFieldData;
}  // namespace detail

// c0 + c1*alpha + c2*alpha^2 in Q[x]/(f).
class CubicElement {
 public:
  CubicElement() = default;
  CubicElement(std::shared_ptr<const detail::CubicFieldData> field, Rational c0, Rational c1 = {},
               Rational c2 = {});

  const Rational& operator[](std::size_t i) const { return c_[i]; }
  const std::array<Rational, 3>& coefficients() const { return c_; }
  const std::shared_ptr<const detail::CubicFieldData>& field() const { return field_; }

  bool is_zero() const;
  bool is_rational() const { return c_[1].is_zero() && c_[2].is_zero(); }
  UniPoly as_poly() const { return UniPoly({c_[0], c_[1], c_[2]}); }

  // Division by zero raises std::domain_error.
  CubicElement inverse() const;

  CubicElement& operator+=(const CubicElement& o);
  CubicElement& operator-=(const CubicElement& o);
  CubicElement& operator*=(const CubicElement& o);
  CubicElement& operator*=(const Rational& k);
  CubicElement& operator/=(const CubicElement& o) { return *this *= o.inverse(); }

  friend CubicElement operator+(CubicElement a, const CubicElement& b) { return a += b; }
  friend CubicElement operator-(CubicElement a, const CubicElement& b) { return a -= b; }
  friend CubicElement operator*(CubicElement a, const CubicElement& b) { return a *= b; }
  friend CubicElement operator*(CubicElement a, const Rational& k) { return a *= k; }
  friend CubicElement operator*(const Rational& k, CubicElement a) { return a *= k; }
  friend CubicElement operator/(CubicElement a, const CubicElement& b) { return a /= b; }
  friend CubicElement operator-(const CubicElement& a);
  friend bool operator==(const CubicElement& a, const CubicElement& b) { return a.c_ == b.c_; }

  std::string str(char var = 'a') const;

 private:
  std::shared_ptr<const detail::CubicFieldData> field_;
  std::array<Rational, 3> c_{};
};

std::size_t height_bits(const CubicElement& e);

// Free-function form of CubicElement::inverse.
CubicElement cubic_invert(const CubicElement& e);

// K3 = Q[x]/(f) with f monic, irreducible and of square discriminant, so
// K3/Q is cyclic. Carries sigma, the generator alpha -> sigma(alpha) built
// from the positive square root of disc(f).
class CyclicCubicField {
 public:
  using Element = CubicElement;

  // Rejects f that is not monic of degree 3, has a rational root or a
  // non-square discriminant.
  explicit CyclicCubicField(const UniPoly& monic_f);

  const UniPoly& polynomial() const;
  const Rational& disc() const;
  const Rational& sqrt_disc() const;

  CubicElement embed(const Rational& q) const;
  CubicElement element(const Rational& c0, const Rational& c1, const Rational& c2) const;
  CubicElement element(const UniPoly& p) const;  // reduced mod f
  CubicElement generator() const;

  // sigma applied to an element; sigma^3 = id.
  CubicElement sigma(const CubicElement& e) const;
  CubicElement sigma_power(const CubicElement& e, int k) const;

  Rational trace(const CubicElement& e) const;
  Rational norm(const CubicElement& e) const;
  // Characteristic polynomial over Q (monic, degree 3).
  UniPoly charpoly(const CubicElement& e) const;

  const std::shared_ptr<const detail::CubicFieldData>& data() const { return data_; }

  friend bool operator==(const CyclicCubicField& a, const CyclicCubicField& b) {
    return a.polynomial() == b.polynomial();
  }

 private:
  std::shared_ptr<const detail::CubicFieldData> data_;
};

// sigma(alpha) as an element; the galois_generator of the field.
CubicElement galois_generator(const CyclicCubicField& k);

// a + b*sqrt(delta) with a, b in K3.
class SexticElement {
 public:
  SexticElement() = default;
  SexticElement(std::shared_ptr<const detail::SexticFieldData> field, CubicElement a,
                CubicElement b);

  const CubicElement& a() const { return a_; }
  const CubicElement& b() const { return b_; }
  const std::shared_ptr<const detail::SexticFieldData>& field() const { return field_; }

  bool is_zero() const { return a_.is_zero() && b_.is_zero(); }
  // a^2 - delta b^2.
  CubicElement norm_to_cubic() const;
  SexticElement inverse() const;

  SexticElement& operator+=(const SexticElement& o);
  SexticElement& operator-=(const SexticElement& o);
  SexticElement& operator*=(const SexticElement& o);
  SexticElement& operator/=(const SexticElement& o) { return *this *= o.inverse(); }

  friend SexticElement operator+(SexticElement x, const SexticElement& y) { return x += y; }
  friend SexticElement operator-(SexticElement x, const SexticElement& y) { return x -= y; }
  friend SexticElement operator*(SexticElement x, const SexticElement& y) { return x *= y; }
  friend SexticElement operator/(SexticElement x, const SexticElement& y) { return x /= y; }
  friend SexticElement operator-(const SexticElement& x);
  friend bool operator==(const SexticElement& x, const SexticElement& y) {
    return x.a_ == y.a_ && x.b_ == y.b_;
  }

  std::string str() const;

 private:
  std::shared_ptr<const detail::SexticFieldData> field_;
  CubicElement a_;
  CubicElement b_;
};

std::size_t height_bits(const SexticElement& e);

// K6 = K3(sqrt(delta)), delta square-free and not 1. Cyclic of degree 6
// with generator rho(a + b sqrt(delta)) = sigma(a) - sigma(b) sqrt(delta).
class SexticField {
 public:
  using Element = SexticElement;

  SexticField(CyclicCubicField cubic, const BigInt& delta);

  const CyclicCubicField& cubic() const;
  const BigInt& delta() const;

  SexticElement embed(const Rational& q) const;
  SexticElement lift(const CubicElement& a) const;
  SexticElement make(const CubicElement& a, const CubicElement& b) const;
  SexticElement sqrt_delta() const;

  SexticElement rho(const SexticElement& e) const;
  SexticElement rho_power(const SexticElement& e, int k) const;

  const std::shared_ptr<const detail::SexticFieldData>& data() const { return data_; }

 private:
  std::shared_ptr<const detail::SexticFieldData> data_;
};

struct EmbeddingSearchOptions {
  unsigned precision_bits = 512;
  unsigned denominator_bits = 160;
};

struct CubicEmbedding {
  // Root of g written in the basis 1, alpha, alpha^2 of Q[x]/(f).
  std::array<Rational, 3> image;
};

enum class EmbeddingAbsence { proved_distinct, not_found_within_bound };

struct IsomorphismResult {
  std::optional<CubicEmbedding> embedding;
  std::optional<EmbeddingAbsence> absence;
  std::string reason;
  explicit operator bool() const { return embedding.has_value(); }
};

// Numerically proposed, exactly certified field isomorphism test for two
// monic cyclic cubics.
IsomorphismResult is_isomorphic_cubic(const UniPoly& f, const UniPoly& g,
                                      const EmbeddingSearchOptions& options = {});

struct ConductorEstimate {
  BigInt determined{1};               // product of certified totally ramified primes
  std::vector<BigInt> ambiguous;      // primes whose status is not settled
};

// Primes outside {2,3} at which the primitive integral form of f reduces
// to a cube of a linear form and is Eisenstein after translation count as
// ramified. Cubes that are not Eisenstein, and 2, 3 when they divide the
// discriminant, are reported as ambiguous. With a square discriminant,
// primes = 2 mod 3 (2 included) are dropped, since they cannot ramify in a
// cyclic cubic field. Pass the integral form, not a monic rescaling, when
// the leading coefficient carries ramified primes.
ConductorEstimate cubic_conductor_heuristic(const CyclicCubicField& k);
ConductorEstimate cubic_conductor_heuristic(const UniPoly& f);

// Real roots of a square-free polynomial, approximated by dyadic rationals
// within 2^-bits.
std::vector<Rational> approximate_real_roots(const UniPoly& p, unsigned bits);

// Best continued-fraction approximation of x with denominator <= bound.
Rational rational_reconstruct(const Rational& x, const BigInt& bound);

}  // namespace sextic
