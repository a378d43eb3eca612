#include "sextic/families.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "sextic/factor.hpp"

namespace sextic {

namespace {

void require_coprime(const BigInt& m, const BigInt& n, const char* who) {
  BigInt g;
  mpz_gcd(g.get_mpz_t(), m.get_mpz_t(), n.get_mpz_t());
  if (g != 1) throw std::invalid_argument(std::string(who) + ": gcd(m, n) must be 1");
}

S6Point checked(const CurveModel& e, const S6Point& p, const char* who) {
  if (!S6Surface(e).contains(p)) throw std::logic_error(std::string(who) + ": point is off the surface");
  return p;
}

void add_primes(std::set<BigInt>& out, const BigInt& n) {
  if (n == 0) return;
  for (const auto& p : prime_divisors(n)) out.insert(p);
}

std::vector<BigInt> sorted(const std::set<BigInt>& s) { return {s.begin(), s.end()}; }

bool divides(const BigInt& p, const BigInt& n) { return mpz_divisible_p(n.get_mpz_t(), p.get_mpz_t()) != 0; }

bool eisenstein_integer(const std::vector<BigInt>& c, const BigInt& p) {
  // c lowest degree first.
  if (divides(p, c.back())) return false;
  for (std::size_t i = 0; i + 1 < c.size(); ++i) {
    if (!divides(p, c[i])) return false;
  }
  return !divides(BigInt(p * p), c.front());
}

}  // namespace

// ---- isog3 ---------------------------------------------------------------------

CurveModel isog3_curve(const Rational& a, const Rational& b) {
  return CurveModel::make(1, a, Rational(-2) * a * b, a * b * b);
}

S6Point isog3_point(const BigInt& a, const BigInt& b, const BigInt& m, const BigInt& n) {
  if (a == 0 || b == 0) throw std::invalid_argument("isog3_point: a and b must be nonzero");
  if (n == 0) throw std::invalid_argument("isog3_point: n must be nonzero");
  require_coprime(m, n, "isog3_point");
  const Rational A(a), B(b), M(m), N(n);
  const Rational w = M * M + Rational(3) * N * N;
  const Rational U = Rational(9) * B * B * w / (Rational(4) * N * N) + A * B;
  const Rational D = Rational(27) * pow(B, 4) * M * w / (Rational(4) * pow(N, 3));
  return checked(isog3_curve(A, B), {U, D, B}, "isog3_point");
}

S6Point isog3_point_raw(const Rational& a, const Rational& b, const Rational& s) {
  if (a.is_zero() || b.is_zero()) throw std::invalid_argument("isog3_point_raw: a and b must be nonzero");
  const Rational U = s * s + a * b + Rational(27) * b * b / Rational(4);
  const Rational D = b * s * (Rational(4) * s * s + Rational(27) * b * b) / Rational(2);
  return checked(isog3_curve(a, b), {U, D, b}, "isog3_point_raw");
}

UniPoly isog3_cubic(const BigInt& m, const BigInt& n) {
  if (n == 0) throw std::invalid_argument("isog3_cubic: n must be nonzero");
  require_coprime(m, n, "isog3_cubic");
  const Rational w(BigInt(m * m + 3 * n * n));
  return UniPoly({-w, Rational(6) * w, Rational(-9) * w, Rational(BigInt(12 * n * n))});
}

BigInt isog3_form(const BigInt& a, const BigInt& b, const BigInt& m, const BigInt& n) {
  return BigInt((9 * b * m * m + (4 * a + 27 * b) * n * n) * (m * m + 3 * n * n));
}

ConductorData isog3_conductors(const BigInt& a, const BigInt& b, const BigInt& m, const BigInt& n) {
  require_coprime(m, n, "isog3_conductors");
  ConductorData out;
  out.cubic_conductor = m * m + 3 * n * n;
  out.quad_disc = 9 * b * m * m + (4 * a + 27 * b) * n * n;
  out.product = out.cubic_conductor * out.quad_disc;
  out.squarefree = out.product != 0 && is_squarefree(out.product);
  std::set<BigInt> amb;
  add_primes(amb, BigInt(6 * a * b));
  out.ambiguous_support = sorted(amb);
  return out;
}

std::string to_string(EisensteinResult r) {
  switch (r) {
    case EisensteinResult::eisenstein: return "eisenstein";
    case EisensteinResult::reverse_eisenstein: return "reverse_eisenstein";
    case EisensteinResult::neither: return "neither";
  }
  return "?";
}

EisensteinResult eisenstein_check(const UniPoly& p, const BigInt& prime) {
  if (prime < 2) throw std::invalid_argument("eisenstein_check: prime must be >= 2");
  if (p.degree() < 1) throw std::invalid_argument("eisenstein_check: degree must be >= 1");
  std::vector<BigInt> c;
  for (const auto& q : p.coefficients()) {
    if (!q.is_integer()) throw std::invalid_argument("eisenstein_check: coefficients must be integers");
    c.push_back(q.num());
  }
  if (eisenstein_integer(c, prime)) return EisensteinResult::eisenstein;
  std::reverse(c.begin(), c.end());
  if (c.back() != 0 && eisenstein_integer(c, prime)) return EisensteinResult::reverse_eisenstein;
  return EisensteinResult::neither;
}

// ---- 160b1 ---------------------------------------------------------------------

CurveModel e160b1_curve() { return CurveModel::make(1, -4, -1, 0); }

S6Point e160b1_point(const BigInt& m, const BigInt& n) {
  if (m == 0 && n == 0) throw std::invalid_argument("e160b1_point: (m, n) = (0, 0)");
  require_coprime(m, n, "e160b1_point");
  const Rational M(m), N(n);
  const Rational h = Rational(3) * M * M + N * N;
  const Rational U(5, 4);
  const Rational D = M * N * (Rational(245) * M * M + Rational(81) * N * N) / (Rational(270) * h * h);
  const Rational T = -(Rational(25) * M * M + Rational(9) * N * N) / (Rational(45) * h);
  return checked(e160b1_curve(), {U, D, T}, "e160b1_point");
}

UniPoly e160b1_cubic(const BigInt& m, const BigInt& n) {
  const BigInt F = 3 * m * m + 25 * n * n;
  const BigInt G = m * m + 9 * n * n;
  return UniPoly({Rational(BigInt(25 * G * G)), Rational(BigInt(54 * F * G)),
                  Rational(BigInt(9 * F * (11 * m * m + 81 * n * n))), Rational(BigInt(36 * F * G))});
}

BigInt e160b1_quadratic_class(const BigInt& m, const BigInt& n) {
  const BigInt F = 3 * m * m + 25 * n * n;
  const BigInt G = m * m + 9 * n * n;
  return squarefree_part(Rational(BigInt(-G * F)));
}

std::pair<BigInt, BigInt> e160b1_cubic_parameters(const BigInt& m, const BigInt& n) {
  BigInt mm = 5 * m, nn = n, g;
  mpz_gcd(g.get_mpz_t(), mm.get_mpz_t(), nn.get_mpz_t());
  if (g != 0) {
    mm /= g;
    nn /= g;
  }
  return {mm, nn};
}

std::string to_string(Ramification r) {
  switch (r) {
    case Ramification::ramified: return "ramified";
    case Ramification::unramified: return "unramified";
    case Ramification::undetermined: return "undetermined";
  }
  return "?";
}

Ramification e160b1_ramification(const BigInt& m, const BigInt& n, const BigInt& p) {
  require_coprime(m, n, "e160b1_ramification");
  if (!is_probable_prime(p)) throw std::invalid_argument("e160b1_ramification: p must be prime");
  if (p == 2 || p == 3 || p == 5) return Ramification::undetermined;
  const BigInt F = 3 * m * m + 25 * n * n;
  const unsigned v = valuation(F, p);
  if (v == 0) return Ramification::unramified;
  if (v == 1) return Ramification::ramified;
  return Ramification::undetermined;
}

// ---- e2cyclic ------------------------------------------------------------------

S6Point E2CyclicModel::section(const Rational& T) const {
  const Rational k = Rational(3) * c * c + Rational(1);
  return {Rational(0), Rational(18) * c * k * T, T};
}

UniPoly E2CyclicModel::section_residual() const {
  // T D^2 - rhs is a polynomial of degree <= 6 in T; check it by interpolation
  // through enough nonzero points.
  const S6Surface s(curve);
  std::vector<Rational> xs, ys;
  for (int i = 1; i <= 9; ++i) {
    const Rational T(i);
    xs.push_back(T);
    ys.push_back(s.residual(section(T)));
  }
  return interpolate(xs, ys);
}

E2CyclicModel e2cyclic_model(const Rational& b, const Rational& c) {
  if (b.is_zero()) throw std::invalid_argument("e2cyclic_model: b must be nonzero");
  if (c.is_zero()) throw std::invalid_argument("e2cyclic_model: c must be nonzero");
  const Rational k = Rational(3) * c * c + Rational(1);
  return {CurveModel::make(Rational(3) * b, 0, Rational(-3) * k, Rational(-2) * k), b, c};
}

S6Point e2cyclic_2P_point(const Rational& b, const Rational& c, const Rational& T) {
  const E2CyclicModel model = e2cyclic_model(b, c);
  const Rational k = Rational(3) * c * c + Rational(1);
  const Rational den = T * T * T - Rational(3) * k * T - Rational(2) * k;
  if (den.is_zero()) throw std::invalid_argument("e2cyclic_2P_point: T0^3 - 3kT0 - 2k = 0");
  if (T.is_zero()) throw std::invalid_argument("e2cyclic_2P_point: T0 = 0");
  const Rational U = Rational(3) * k * T * (T * T + Rational(2) * T - c * c + Rational(1)) *
                     (T * T + Rational(2) * T + Rational(3) * c * c + Rational(1)) /
                     (Rational(4) * b * c * c * den);
  const auto D = S6Surface(model.curve).solve_D(T, U);
  if (!D) throw std::logic_error("e2cyclic_2P_point: rhs / T is not a rational square");
  return {U, *D, T};
}

BigInt e2cyclic_y_class(const BigInt& b, const BigInt& c, const BigInt& m, const BigInt& n) {
  const BigInt k = 3 * c * c + 1;
  const BigInt v = -3 * k * (3 * m * m + n * n) * (m * m - n * n) * b * m *
                   (3 * m * m * m - 9 * c * m * m * n - 3 * m * n * n + c * n * n * n);
  return squarefree_part(Rational(v));
}

// ---- records -------------------------------------------------------------------

std::string to_string(FamilyTag t) {
  switch (t) {
    case FamilyTag::isog3: return "isog3";
    case FamilyTag::e160b1: return "e160b1";
    case FamilyTag::e2cyclic: return "e2cyclic";
  }
  return "?";
}

FamilyRecord isog3_record(const BigInt& a, const BigInt& b, const BigInt& m, const BigInt& n) {
  const S6Point p = isog3_point(a, b, m, n);
  const CurveModel e = isog3_curve(Rational(a), Rational(b));
  return {FamilyTag::isog3,
          {{"a", Rational(a)}, {"b", Rational(b)}, {"m", Rational(m)}, {"n", Rational(n)}},
          e,
          p,
          point_to_sextic_field(e, p),
          isog3_conductors(a, b, m, n)};
}

FamilyRecord e160b1_record(const BigInt& m, const BigInt& n) {
  const S6Point p = e160b1_point(m, n);
  const auto [lm, ln] = e160b1_cubic_parameters(m, n);
  const BigInt F = 3 * lm * lm + 25 * ln * ln;
  ConductorData cd;
  cd.cubic_conductor = 1;
  std::set<BigInt> amb{BigInt(2), BigInt(3), BigInt(5)};
  for (const auto& pp : factorize(F)) {
    if (amb.count(pp.prime)) continue;
    if (pp.exponent == 1) {
      cd.cubic_conductor *= pp.prime;
    } else {
      amb.insert(pp.prime);
    }
  }
  cd.quad_disc = e160b1_quadratic_class(lm, ln);
  cd.product = cd.cubic_conductor * cd.quad_disc;
  cd.squarefree = is_squarefree(cd.product);
  cd.ambiguous_support = sorted(amb);
  return {FamilyTag::e160b1,
          {{"m", Rational(m)}, {"n", Rational(n)}},
          e160b1_curve(),
          p,
          point_to_sextic_field(e160b1_curve(), p),
          cd};
}

FamilyRecord e2cyclic_record(const Rational& b, const Rational& c, const Rational& T0) {
  const E2CyclicModel model = e2cyclic_model(b, c);
  const S6Point p = e2cyclic_2P_point(b, c, T0);
  PipelineResult r = point_to_sextic_field(model.curve, p);
  ConductorData cd;
  std::set<BigInt> amb{BigInt(2), BigInt(3)};
  for (const Rational& q : {b, c}) {
    add_primes(amb, q.num());
    add_primes(amb, q.den());
  }
  cd.quad_disc = squarefree_part(p.U * p.T);
  if (const auto* sc = std::get_if<SexticConstruction>(&r)) {
    cd.cubic_conductor = sc->conductor.determined;
    for (const auto& q : sc->conductor.ambiguous) amb.insert(q);
  } else {
    cd.cubic_conductor = 1;
  }
  cd.product = cd.cubic_conductor * cd.quad_disc;
  cd.squarefree = is_squarefree(cd.product);
  cd.ambiguous_support = sorted(amb);
  return {FamilyTag::e2cyclic, {{"T", T0}, {"b", b}, {"c", c}}, model.curve, p, std::move(r), cd};
}

}  // namespace sextic
