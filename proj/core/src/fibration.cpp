#include "sextic/fibration.hpp"

#include <stdexcept>

#include "sextic/factor.hpp"

namespace sextic {

namespace {

// p, q, g and the X-coordinate of P_inf over any ring holding A, B, T.
template <class R>
struct Sections {
  R p, q, g, x_inf;
  Sections(const R& A, const R& B, const R& T) {
    p = R(3) * T * T + A;
    q = R(4) * (R(27) * A * T * T * T * T + R(54) * B * T * T * T + R(18) * A * A * T * T + R(54) * A * B * T -
                A * A * A + R(27) * B * B);
    g = T * T * T + A * T + B;
    x_inf = R(-12) * (R(3) * A * T * T + R(9) * B * T - A * A);
  }
  // X^3 - 27 (p X + q)^2.
  R rhs(const R& X) const {
    const R l = p * X + q;
    return X * X * X - R(27) * l * l;
  }
};

MultiPoly V(Var v) { return MultiPoly::var(v); }

Sections<MultiPoly> symbolic() { return Sections<MultiPoly>(V(Var::A), V(Var::B), V(Var::T)); }

Sections<UniPoly> in_T(const Rational& A, const Rational& B) {
  return Sections<UniPoly>(UniPoly(A), UniPoly(B), UniPoly::x());
}

long mod_rational(const Rational& q, long p, bool& ok) {
  const BigInt P(p);
  BigInt num, den;
  mpz_mod(num.get_mpz_t(), q.num().get_mpz_t(), P.get_mpz_t());
  mpz_mod(den.get_mpz_t(), q.den().get_mpz_t(), P.get_mpz_t());
  if (den == 0) {
    ok = false;
    return 0;
  }
  BigInt inv;
  mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), P.get_mpz_t());
  BigInt r = num * inv;
  mpz_mod(r.get_mpz_t(), r.get_mpz_t(), P.get_mpz_t());
  return r.get_si();
}

}  // namespace

UniPoly FibrationModel::g() const { return UniPoly({B, A, 0, 1}); }
UniPoly FibrationModel::a2() const { return Rational(-27) * p * p; }
UniPoly FibrationModel::a4() const { return Rational(-54) * p * q; }
UniPoly FibrationModel::a6() const { return Rational(-27) * q * q; }

Rational FibrationModel::residual(const Rational& X, const Rational& Y, const Rational& T) const {
  const Rational l = p(T) * X + q(T);
  return Y * Y - (X * X * X - Rational(27) * l * l);
}

FibrationModel build_fibration(const Rational& A, const Rational& B) {
  if ((Rational(4) * A * A * A + Rational(27) * B * B).is_zero()) {
    throw std::invalid_argument("build_fibration: singular curve (4A^3 + 27B^2 = 0)");
  }
  const auto s = in_T(A, B);
  return FibrationModel{A, B, s.p, s.q};
}

XYPoint uv_to_xy(const Rational& A, const Rational& B, const S6Point& pt) {
  const Rational& T = pt.T;
  if (T.is_zero()) throw std::invalid_argument("uv_to_xy: T = 0");
  const Rational g = T * T * T + A * T + B;
  if (g.is_zero()) throw std::invalid_argument("uv_to_xy: T is a root of T^3 + A T + B (I2 fiber)");
  const Rational X = Rational(36) * g * pt.U / T - Rational(12) * (Rational(3) * A * T * T + Rational(9) * B * T - A * A);
  const Rational Y = Rational(108) * g * pt.D / T;
  return {X, Y};
}

S6Point xy_to_uv(const Rational& A, const Rational& B, const Rational& T, const XYPoint& xy) {
  if (T.is_zero()) throw std::invalid_argument("xy_to_uv: T = 0");
  const Rational g = T * T * T + A * T + B;
  if (g.is_zero()) throw std::invalid_argument("xy_to_uv: T is a root of T^3 + A T + B (I2 fiber)");
  const Rational U =
      (xy.X + Rational(12) * (Rational(3) * A * T * T + Rational(9) * B * T - A * A)) * T / (Rational(36) * g);
  const Rational D = xy.Y * T / (Rational(108) * g);
  return {U, D, T};
}

bool ProofRecord::all() const {
  for (const auto& c : checks) {
    if (!c.holds) return false;
  }
  return !checks.empty();
}

ProofRecord check_T3_torsion(const Rational& A, const Rational& B) {
  const FibrationModel m = build_fibration(A, B);
  ProofRecord r{A, B, {}};
  r.checks.push_back({"psi3(0) = 4 a2 a6 - a4^2 vanishes", (Rational(4) * m.a2() * m.a6() - m.a4() * m.a4()).is_zero()});
  // Y(T3) = 12 sqrt(-3) (-q/4) = -3q sqrt(-3), so Y^2 = 9 q^2 * (-3).
  const UniPoly ycoef = Rational(-3) * m.q;
  r.checks.push_back({"T3 = (0, -3q sqrt(-3)) is on the curve",
                      (ycoef * ycoef * Rational(-3) - in_T(A, B).rhs(UniPoly())).is_zero()});
  return r;
}

ProofRecord check_Pinf_on_curve(const Rational& A, const Rational& B) {
  const auto s = in_T(A, B);
  build_fibration(A, B);
  const Rational k = Rational(108 * 108) * (Rational(-4) * A * A * A - Rational(27) * B * B);
  const UniPoly y2 = k * s.g * s.g;
  ProofRecord r{A, B, {}};
  r.checks.push_back({"P_inf = (-12(3AT^2 + 9BT - A^2), 108 sqrt(-4A^3 - 27B^2) g) is on the curve",
                      (s.rhs(s.x_inf) - y2).is_zero()});
  return r;
}

bool psi3_zero_identity() {
  const auto s = symbolic();
  const MultiPoly a2 = MultiPoly(-27) * s.p * s.p;
  const MultiPoly a4 = MultiPoly(-54) * s.p * s.q;
  const MultiPoly a6 = MultiPoly(-27) * s.q * s.q;
  return (MultiPoly(4) * a2 * a6 - a4 * a4).is_zero();
}

bool t3_identity() {
  const auto s = symbolic();
  const MultiPoly y = MultiPoly(-3) * s.q;
  return multipoly_equal(y * y * MultiPoly(-3), s.rhs(MultiPoly()));
}

bool pinf_identity() {
  const auto s = symbolic();
  const MultiPoly A = V(Var::A), B = V(Var::B);
  const MultiPoly y2 = MultiPoly(108 * 108) * (MultiPoly(-4) * A * A * A - MultiPoly(27) * B * B) * s.g * s.g;
  return multipoly_equal(s.rhs(s.x_inf), y2);
}

bool uv_xy_identity() {
  const auto s = symbolic();
  const MultiPoly T = V(Var::T), X = V(Var::X), Y = V(Var::Y);
  const MultiPoly rhs = s6_weierstrass_rhs_poly();
  // U = N / (36 g), D = Y T / (108 g); both sides scaled by 46656 g^3.
  const MultiPoly N = (X - s.x_inf) * T;
  MultiPoly scaled_rhs;
  for (int k = 0; k <= 3; ++k) {
    scaled_rhs += rhs.coefficient_of(Var::U, k) * pow(N, static_cast<unsigned>(k)) *
                  pow(MultiPoly(36) * s.g, static_cast<unsigned>(3 - k));
  }
  const MultiPoly lhs = MultiPoly(4) * s.g * T * T * T * Y * Y - scaled_rhs;
  const MultiPoly expected = MultiPoly(4) * s.g * T * T * T * (Y * Y - s.rhs(X));
  return multipoly_equal(lhs, expected);
}

FiberProfile fiber_profile(const Rational& A, const Rational& B) {
  const FibrationModel m = build_fibration(A, B);
  FiberProfile out;
  out.discriminant = cubic_discriminant<UniPoly>(UniPoly(Rational(1)), m.a2(), m.a4(), m.a6());
  const auto dec = squarefree_decomposition(out.discriminant);
  for (const auto& f : dec.factors) out.loci.push_back({f.factor, f.multiplicity});
  out.finite_degree = out.discriminant.degree();
  out.infinity_order = 24 - out.finite_degree;

  const UniPoly quartic = (m.q / Rational(4)).monic();
  const UniPoly cubic = m.g().monic();
  bool has3 = false, has2 = false;
  for (const auto& l : out.loci) {
    if (l.multiplicity == 3 && l.locus == quartic && quartic.degree() == 4) has3 = true;
    if (l.multiplicity == 2 && l.locus == cubic) has2 = true;
  }
  out.standard_pattern =
      has3 && has2 && out.loci.size() == 2 && out.finite_degree == 18 && out.infinity_order == 6;
  return out;
}

std::optional<long> count_points_mod_p(const Rational& a2, const Rational& a4, const Rational& a6, long p) {
  if (p < 3 || !is_probable_prime(BigInt(p))) return std::nullopt;
  bool ok = true;
  const long c2 = mod_rational(a2, p, ok);
  const long c4 = mod_rational(a4, p, ok);
  const long c6 = mod_rational(a6, p, ok);
  if (!ok) return std::nullopt;
  const Rational disc = cubic_discriminant(Rational(1), Rational(c2), Rational(c4), Rational(c6));
  if (mod_rational(disc, p, ok) == 0) return std::nullopt;

  // Squares mod p by table.
  std::vector<int> chi(static_cast<std::size_t>(p), -1);
  chi[0] = 0;
  for (long v = 1; v < p; ++v) chi[static_cast<std::size_t>((v * v) % p)] = 1;
  long count = 1;
  for (long x = 0; x < p; ++x) {
    const long v = (((x * x % p) * x + c2 * (x * x % p) + c4 * x + c6) % p + p) % p;
    count += 1 + chi[static_cast<std::size_t>(v)];
  }
  return count;
}

IsogenyCheck isogeny_pointcount_check(const Rational& A, const Rational& B, const Rational& T0,
                                      const std::vector<long>& primes, bool perturb) {
  const FibrationModel m = build_fibration(A, B);
  const Rational p = m.p(T0), q = m.q(T0), g = m.g()(T0);
  if (q.is_zero() || g.is_zero()) throw std::invalid_argument("isogeny check: T0 lies under a singular fiber");
  const Rational c = Rational(4) * g * g + (perturb ? Rational(1) : Rational(0));
  // E:  X^3 - 27p^2 X^2 - 54pq X - 27q^2;  E': X^3 + p^2 X^2 + 2pc X + c^2.
  IsogenyCheck out{T0, {}, true};
  int compared = 0;
  for (long ell : primes) {
    PrimeCount pc;
    pc.prime = ell;
    const auto n1 = count_points_mod_p(Rational(-27) * p * p, Rational(-54) * p * q, Rational(-27) * q * q, ell);
    const auto n2 = count_points_mod_p(p * p, Rational(2) * p * c, c * c, ell);
    if (!n1 || !n2) {
      pc.skipped = true;
      pc.note = "bad reduction";
    } else {
      pc.count_e = *n1;
      pc.count_isogenous = *n2;
      ++compared;
      if (*n1 != *n2) out.counts_agree = false;
    }
    out.primes.push_back(pc);
  }
  if (compared == 0) out.counts_agree = false;
  return out;
}

}  // namespace sextic
