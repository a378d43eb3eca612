#pragma once

#include <optional>
#include <string>
#include <vector>

#include "sextic/multipoly.hpp"
#include "sextic/rational.hpp"
#include "sextic/s6.hpp"
#include "sextic/unipoly.hpp"

namespace sextic {

// Y^2 = X^3 - 27 (p X + q)^2 over Q(T), with p = 3T^2 + A and
// q = 4(27A T^4 + 54B T^3 + 18A^2 T^2 + 54AB T - A^3 + 27B^2).
struct FibrationModel {
  Rational A;
  Rational B;
  UniPoly p;
  UniPoly q;

  UniPoly g() const;  // T^3 + A T + B
  // Coefficients of X^3 + a2 X^2 + a4 X + a6.
  UniPoly a2() const;
  UniPoly a4() const;
  UniPoly a6() const;
  // Y^2 - (X^3 - 27 (p X + q)^2) at a rational T.
  Rational residual(const Rational& X, const Rational& Y, const Rational& T) const;
};

// Rejects 4A^3 + 27B^2 = 0.
FibrationModel build_fibration(const Rational& A, const Rational& B);

struct XYPoint {
  Rational X;
  Rational Y;
  friend bool operator==(const XYPoint&, const XYPoint&) = default;
};

// (U, D) on the fiber over T of S6(y^2 = x^3 + A x + B) to (X, Y) on the
// Weierstrass fiber and back. T = 0 and roots of T^3 + A T + B are rejected.
XYPoint uv_to_xy(const Rational& A, const Rational& B, const S6Point& p);
S6Point xy_to_uv(const Rational& A, const Rational& B, const Rational& T, const XYPoint& xy);

struct IdentityCheck {
  std::string name;
  bool holds = false;
};

struct ProofRecord {
  Rational A;
  Rational B;
  std::vector<IdentityCheck> checks;
  bool all() const;
};

// psi_3(0) = 4 a2 a6 - a4^2 vanishes identically and T3 = (0, -3q sqrt(-3))
// satisfies Y^2 = -27 q^2, checked as polynomials in T.
ProofRecord check_T3_torsion(const Rational& A, const Rational& B);
// P_inf = (-12(3A T^2 + 9B T - A^2), 108 sqrt(-4A^3 - 27B^2) g(T)) lies on the
// curve, with the square root entering only through its square.
ProofRecord check_Pinf_on_curve(const Rational& A, const Rational& B);

// The same identities with A, B, T symbolic.
bool psi3_zero_identity();
bool t3_identity();
bool pinf_identity();
// X, Y substitution turns T D^2 - rhs into T^3/(11664 g^2) (Y^2 - RHS).
bool uv_xy_identity();

struct FiberLocus {
  UniPoly locus;  // monic
  unsigned multiplicity = 0;
};

struct FiberProfile {
  UniPoly discriminant;  // of the Weierstrass cubic in X, as a polynomial in T
  std::vector<FiberLocus> loci;
  int finite_degree = 0;
  int infinity_order = 0;  // 24 - finite_degree
  // Multiplicity-3 quartic q/4, multiplicity-2 cubic g, degree 18, order 6 at infinity.
  bool standard_pattern = false;
};

FiberProfile fiber_profile(const Rational& A, const Rational& B);

struct PrimeCount {
  long prime = 0;
  long count_e = 0;
  long count_isogenous = 0;
  bool skipped = false;
  std::string note;
};

struct IsogenyCheck {
  Rational T0;
  std::vector<PrimeCount> primes;
  bool counts_agree = false;
};

// Point counts over F_p of the fiber at T0 and of
// Y^2 = X^3 + (p X + 4 g^2)^2; perturb adds 1 to the constant 4 g^2 as a
// negative control. Bad primes are skipped and noted.
IsogenyCheck isogeny_pointcount_check(const Rational& A, const Rational& B, const Rational& T0,
                                      const std::vector<long>& primes, bool perturb = false);

// Affine points plus infinity of y^2 = x^3 + a2 x^2 + a4 x + a6 over F_p;
// nullopt when a coefficient denominator or the discriminant vanishes mod p.
std::optional<long> count_points_mod_p(const Rational& a2, const Rational& a4, const Rational& a6, long p);

}  // namespace sextic
