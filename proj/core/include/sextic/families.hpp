#pragma once

#include <map>
#include <string>
#include <vector>

#include "sextic/ecurve.hpp"
#include "sextic/s6.hpp"
#include "sextic/unipoly.hpp"

namespace sextic {

// ---- y^2 = x^3 + a (x - b)^2, which carries a rational 3-isogeny -----------

// y^2 = x^3 + a x^2 - 2ab x + ab^2.
CurveModel isog3_curve(const Rational& a, const Rational& b);

// (U, D, T) = (9b^2(m^2 + 3n^2)/(4n^2) + ab, 27b^4 m(m^2 + 3n^2)/(4n^3), b).
// Requires a, b != 0, n != 0 and gcd(m, n) = 1.
S6Point isog3_point(const BigInt& a, const BigInt& b, const BigInt& m, const BigInt& n);
// The same curve in the parameter s = 3bm/(2n):
// (s^2 + ab + 27b^2/4, b s (4s^2 + 27b^2)/2, b).
S6Point isog3_point_raw(const Rational& a, const Rational& b, const Rational& s);

// 12n^2 x^3 - 9(m^2 + 3n^2) x^2 + 6(m^2 + 3n^2) x - (m^2 + 3n^2).
UniPoly isog3_cubic(const BigInt& m, const BigInt& n);

struct ConductorData {
  BigInt cubic_conductor;
  BigInt quad_disc;
  BigInt product;
  bool squarefree = false;
  std::vector<BigInt> ambiguous_support;  // ascending primes
};

// cubic m^2 + 3n^2, quadratic 9bm^2 + (4a + 27b)n^2, ambiguous at primes of 6ab.
ConductorData isog3_conductors(const BigInt& a, const BigInt& b, const BigInt& m, const BigInt& n);

// (9bm^2 + (4a + 27b)n^2)(m^2 + 3n^2).
BigInt isog3_form(const BigInt& a, const BigInt& b, const BigInt& m, const BigInt& n);

enum class EisensteinResult { eisenstein, reverse_eisenstein, neither };
std::string to_string(EisensteinResult r);

// p must have integer coefficients (checked) and degree >= 1.
EisensteinResult eisenstein_check(const UniPoly& p, const BigInt& prime);

// ---- 160b1: y^2 = x^3 - 4x^2 - x -------------------------------------------

CurveModel e160b1_curve();

// (5/4, mn(245m^2 + 81n^2)/(270(3m^2 + n^2)^2), -(25m^2 + 9n^2)/(45(3m^2 + n^2))).
S6Point e160b1_point(const BigInt& m, const BigInt& n);

// 36FG x^3 + 9F(11m^2 + 81n^2) x^2 + 54FG x + 25G^2 with F = 3m^2 + 25n^2 and
// G = m^2 + 9n^2. These (m, n) are related to the point parameters by
// m/n = 5 m_point / n_point.
UniPoly e160b1_cubic(const BigInt& m, const BigInt& n);
// Square class -GF of the quadratic subfield, same parameters.
BigInt e160b1_quadratic_class(const BigInt& m, const BigInt& n);
// Parameters of e160b1_cubic matching e160b1_point(m, n).
std::pair<BigInt, BigInt> e160b1_cubic_parameters(const BigInt& m, const BigInt& n);

enum class Ramification { ramified, unramified, undetermined };
std::string to_string(Ramification r);

// Behaviour of p in the cubic field of e160b1_cubic(m, n): primes dividing
// F exactly once ramify (reverse Eisenstein), primes prime to F do not, and
// 2, 3, 5 and p^2 | F are left undetermined.
Ramification e160b1_ramification(const BigInt& m, const BigInt& n, const BigInt& p);

// ---- 3b y^2 = x^3 - 3(3c^2 + 1) x - 2(3c^2 + 1) ----------------------------

struct E2CyclicModel {
  CurveModel curve;
  Rational b;
  Rational c;
  // Section T -> (0, 18c(3c^2 + 1) T, T).
  S6Point section(const Rational& T) const;
  // Surface residual of the section as a polynomial in T (identically zero).
  UniPoly section_residual() const;
};

// Rejects b = 0 and c = 0.
E2CyclicModel e2cyclic_model(const Rational& b, const Rational& c);

// The curve traced by the section 2P:
// U = 3kT(T^2 + 2T - c^2 + 1)(T^2 + 2T + 3c^2 + 1) / (4bc^2 (T^3 - 3kT - 2k)),
// k = 3c^2 + 1, with D the nonnegative square root of rhs / T.
S6Point e2cyclic_2P_point(const Rational& b, const Rational& c, const Rational& T0);

// Square class of -3k(3m^2 + n^2)(m^2 - n^2) b m (3m^3 - 9cm^2 n - 3mn^2 + cn^3),
// the field of y for the 2P curve at T = cn/m - 1.
BigInt e2cyclic_y_class(const BigInt& b, const BigInt& c, const BigInt& m, const BigInt& n);

// ---- records ----------------------------------------------------------------

enum class FamilyTag { isog3, e160b1, e2cyclic };
std::string to_string(FamilyTag t);

struct FamilyRecord {
  FamilyTag family;
  std::map<std::string, Rational> parameters;  // ordered by name
  CurveModel curve;
  S6Point point;
  PipelineResult construction;
  ConductorData conductor;
};

FamilyRecord isog3_record(const BigInt& a, const BigInt& b, const BigInt& m, const BigInt& n);
FamilyRecord e160b1_record(const BigInt& m, const BigInt& n);
FamilyRecord e2cyclic_record(const Rational& b, const Rational& c, const Rational& T0);

}  // namespace sextic
