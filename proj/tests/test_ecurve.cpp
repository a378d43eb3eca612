#include <doctest.h>

#include "sextic/ecurve.hpp"
#include "test_support.hpp"

using namespace sextic;

namespace {

using RP = Point<Rational>;

EllipticCurve<RationalField> curve(const Rational& A, const Rational& B) {
  return EllipticCurve<RationalField>(CurveModel::weierstrass(A, B), RationalField{});
}

}  // namespace

TEST_CASE("curve model validation and twist") {
  CHECK_THROWS(CurveModel::weierstrass(0, 0).validate());
  CHECK_THROWS(CurveModel::make(0, 0, 0, 1));
  CHECK_THROWS(CurveModel::make(1, 0, -3, 2));  // (x - 1)^2 (x + 2)
  const CurveModel e = CurveModel::make(1, -4, -1, 0);
  CHECK(e.is_nonsingular());
  CHECK(e.residual(0, 0) == 0);
  const CurveModel t = e.twist(-26);
  CHECK(t.c == Rational(-1, 26));
  CHECK(t.residual(0, 0) == 0);
}

TEST_CASE("group law on y^2 = x^3 + 1") {
  const auto e = curve(0, 1);
  const RP p(2, 3);
  REQUIRE(e.contains(p));
  CHECK(e.add(p, p) == RP(0, 1));
  CHECK(e.add(p, RP::infinity()) == p);
  CHECK(e.add(RP::infinity(), p) == p);
  CHECK(e.add(p, e.neg(p)).is_infinity());
  CHECK(e.mul(6, p).is_infinity());
  CHECK_FALSE(e.mul(3, p).is_infinity());
  CHECK(e.mul(-1, p) == e.neg(p));
  CHECK(e.mul(0, p).is_infinity());
}

TEST_CASE("2-torsion on y^2 = x(x^2 - 4x - 1)") {
  const EllipticCurve<RationalField> e(CurveModel::make(1, -4, -1, 0), RationalField{});
  CHECK(e.dbl(RP(0, 0)).is_infinity());
}

TEST_CASE("group law is associative and closed on y^2 = x^3 - 2") {
  const auto e = curve(0, -2);
  const RP p(3, 5);
  const RP q = e.dbl(p), r = e.mul(3, p);
  CHECK(e.contains(q));
  CHECK(e.contains(r));
  CHECK(e.add(e.add(p, q), r) == e.add(p, e.add(q, r)));
  CHECK(e.add(p, q) == e.add(q, p));
  CHECK(e.sub(r, q) == p);
}

TEST_CASE("non-Weierstrass coefficient c") {
  // 3 y^2 = x^3 + 3x^2 ... with (1, 1) on it: 3 = 1 + a2 + a1 + a0.
  const EllipticCurve<RationalField> e(CurveModel::make(3, 1, 0, 1), RationalField{});
  const RP p(1, 1);
  REQUIRE(e.contains(p));
  CHECK(e.contains(e.dbl(p)));
  CHECK(e.contains(e.add(p, e.dbl(p))));
  CHECK(e.add(e.dbl(p), p) == e.add(p, e.dbl(p)));
}

TEST_CASE("rho has order six and rho^3 negates both points") {
  const auto e = curve(0, -2);
  const RP p(3, 5), q = e.mul(2, RP(3, 5));
  const PairPoint<Rational> pq{p, e.neg(e.mul(5, p))};
  CHECK(rho_power(e, pq, 6) == pq);
  const auto half = rho_power(e, pq, 3);
  CHECK(half.first == e.neg(pq.first));
  CHECK(half.second == e.neg(pq.second));
  const PairPoint<Rational> other{p, q};
  CHECK(rho_power(e, other, -1) == rho_power(e, other, 5));
}

TEST_CASE("stabilizer classes on y^2 = x^3 + 1") {
  const auto e = curve(0, 1);
  const RP O = RP::infinity();
  CHECK(stabilizer_class(e, PairPoint<Rational>{O, O}) == StabilizerClass::full);
  CHECK(stabilizer_class(e, PairPoint<Rational>{RP(0, 1), RP(0, -1)}) == StabilizerClass::order3);
  CHECK(stabilizer_class(e, PairPoint<Rational>{RP(-1, 0), RP(-1, 0)}) == StabilizerClass::order2);
  CHECK(stabilizer_class(e, PairPoint<Rational>{RP(2, 3), RP(0, 1)}) == StabilizerClass::free);
  CHECK(to_string(StabilizerClass::order3) == "order3");
}

TEST_CASE("infinite order heuristic") {
  const auto e1 = curve(0, 1);
  const auto torsion = is_probably_infinite_order(e1, RP(0, 1));
  CHECK_FALSE(torsion.result);
  CHECK(torsion.vanishing_multiple == 3);
  CHECK_FALSE(is_probably_infinite_order(e1, RP::infinity()).result);
  const auto e2 = curve(0, -2);
  const auto c = is_probably_infinite_order(e2, RP(3, 5));
  CHECK(c.result);
  CHECK(c.vanishing_multiple == 0);
  CHECK(c.height_4p > c.height_p);
}

TEST_CASE("group law over a cubic field") {
  const CyclicCubicField k(UniPoly({Rational(1), Rational(-3), Rational(0), Rational(1)}));
  const EllipticCurve<CyclicCubicField> e(CurveModel::weierstrass(0, -2), k);
  const auto p = e.point(3, 5);
  const auto q = map_point(p, [&](const CubicElement& v) { return k.sigma(v); });
  CHECK(q == p);  // rational points are fixed
  CHECK(trace_under(e, p, [&](const CubicElement& v) { return k.sigma(v); }, 3) == e.mul(3, p));
}
