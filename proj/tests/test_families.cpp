#include <doctest.h>

#include <numeric>

#include "sextic/factor.hpp"
#include "sextic/families.hpp"
#include "test_support.hpp"

using namespace sextic;

namespace {

UniPoly ints(std::initializer_list<long> lowest_first) {
  std::vector<Rational> c;
  for (long v : lowest_first) c.emplace_back(v);
  return UniPoly(c);
}

// Coprime (m, n) with m, n in [1, bound] (n may be negative when signed).
std::pair<long, long> coprime_pair(testing::RationalSource& src, long bound, bool signed_m = false) {
  for (;;) {
    const long m = src.integer(signed_m ? -bound : 1, bound), n = src.integer(1, bound);
    if (m != 0 && std::gcd(m, n) == 1) return {m, n};
  }
}

}  // namespace

TEST_CASE("isog3 points") {
  CHECK(isog3_point(1, 1, 1, 1) == S6Point{10, 27, 1});
  CHECK(isog3_point(1, 1, 2, 1) == S6Point{Rational(67, 4), Rational(189, 2), 1});
  CHECK(isog3_point(3, -2, 5, 7).T == -2);
  CHECK(isog3_point_raw(1, 1, Rational(3, 1)) == isog3_point(1, 1, 2, 1));
  CHECK_THROWS(isog3_point(0, 1, 1, 1));
  CHECK_THROWS(isog3_point(1, 1, 1, 0));
  CHECK_THROWS(isog3_point(1, 1, 2, 4));
}

TEST_CASE("isog3 points lie on the surface") {
  testing::RationalSource src(71);
  for (int i = 0; i < 200; ++i) {
    const long a = src.integer(-9, 9), b = src.integer(-9, 9);
    if (a == 0 || b == 0) continue;
    const CurveModel e = isog3_curve(a, b);
    if (!e.is_nonsingular()) continue;
    const auto [m, n] = coprime_pair(src, 40, true);
    CHECK(S6Surface(e).contains(isog3_point(a, b, m, n)));
  }
}

TEST_CASE("isog3 cubic and conductors") {
  const UniPoly f11 = isog3_cubic(1, 1);
  CHECK(f11 == ints({-4, 24, -36, 12}));
  CHECK(discriminant(f11) == 20736);
  const UniPoly f21 = isog3_cubic(2, 1);
  CHECK(f21 == ints({-7, 42, -63, 12}));
  CHECK(eisenstein_check(f21, BigInt(7)) == EisensteinResult::eisenstein);
  testing::RationalSource src(73);
  for (int i = 0; i < 50; ++i) {
    const auto [m, n] = coprime_pair(src, 60, true);
    CHECK(is_square(discriminant(isog3_cubic(m, n))));
  }

  const ConductorData c = isog3_conductors(1, 1, 2, 1);
  CHECK(c.cubic_conductor == 7);
  CHECK(c.quad_disc == 67);
  CHECK(c.product == 469);
  CHECK(c.squarefree);
  const ConductorData d = isog3_conductors(1, 1, 1, 1);
  CHECK(d.cubic_conductor == 4);
  CHECK(d.quad_disc == 40);
  CHECK(d.product == 160);
  CHECK_FALSE(d.squarefree);
  CHECK(isog3_form(1, 1, 2, 1) == 469);
}

// The gcd divides 4a, so its odd part divides 6ab; with m, n odd its 2-part
// is 4 even when 6ab has a single factor 2.
TEST_CASE("common factors of the two forms") {
  testing::RationalSource src(79);
  for (int i = 0; i < 200; ++i) {
    const long a = src.integer(-30, 30), b = src.integer(1, 30);
    if (a == 0) continue;
    const auto [m, n] = coprime_pair(src, 200);
    const ConductorData c = isog3_conductors(a, b, m, n);
    const BigInt g = gcd(c.cubic_conductor, c.quad_disc);
    CHECK(BigInt(4 * a) % g == 0);
    BigInt odd = g;
    while (odd % 2 == 0) odd /= 2;
    CHECK(BigInt(6 * a * b) % odd == 0);
  }
}

TEST_CASE("Eisenstein tests") {
  CHECK(eisenstein_check(ints({-2, 0, 0, 1}), BigInt(2)) == EisensteinResult::eisenstein);
  CHECK(eisenstein_check(ints({1, 0, 0, 2}), BigInt(2)) == EisensteinResult::reverse_eisenstein);
  CHECK(eisenstein_check(ints({1, 1, 1}), BigInt(2)) == EisensteinResult::neither);
  CHECK_THROWS(eisenstein_check(UniPoly({Rational(1, 2), Rational(1)}), BigInt(2)));
}

TEST_CASE("160b1 points") {
  CHECK(e160b1_curve() == CurveModel::make(1, -4, -1, 0));
  CHECK(e160b1_point(3, 1) == S6Point{Rational(5, 4), Rational(127, 3920), Rational(-13, 70)});
  CHECK(e160b1_point(3, 5) == S6Point{Rational(5, 4), Rational(235, 2704), Rational(-5, 26)});
  CHECK(e160b1_point(1, 1) == S6Point{Rational(5, 4), Rational(163, 2160), Rational(-17, 90)});
  testing::RationalSource src(83);
  const S6Surface s(e160b1_curve());
  for (int i = 0; i < 200; ++i) {
    const auto [m, n] = coprime_pair(src, 80, true);
    CHECK(s.contains(e160b1_point(m, n)));
  }
}

TEST_CASE("160b1 ramification") {
  CHECK(e160b1_ramification(3, 1, 13) == Ramification::ramified);
  CHECK(e160b1_ramification(5, 1, 17) == Ramification::unramified);
  CHECK(e160b1_ramification(3, 1, 3) == Ramification::undetermined);
  CHECK(e160b1_cubic_parameters(3, 5) == std::pair<BigInt, BigInt>{BigInt(3), BigInt(1)});
}

TEST_CASE("primes dividing 3m^2 + 25n^2 once give reverse Eisenstein cubics") {
  testing::RationalSource src(89);
  int tested = 0;
  for (int i = 0; i < 400 && tested < 100; ++i) {
    const auto [m, n] = coprime_pair(src, 200, true);
    const BigInt F = BigInt(3 * m * m + 25 * n * n);
    for (const auto& pf : factorize(F)) {
      if (pf.exponent != 1 || pf.prime <= 5) continue;
      CHECK(eisenstein_check(e160b1_cubic(m, n), pf.prime) == EisensteinResult::reverse_eisenstein);
      CHECK(e160b1_ramification(m, n, pf.prime) == Ramification::ramified);
      ++tested;
      break;
    }
  }
  CHECK(tested == 100);
}

TEST_CASE("160b1 cubic has square discriminant") {
  testing::RationalSource src(97);
  for (int i = 0; i < 50; ++i) {
    const auto [m, n] = coprime_pair(src, 50, true);
    CHECK(is_square(discriminant(e160b1_cubic(m, n))));
  }
}

TEST_CASE("e2cyclic model") {
  for (auto [b, c] : {std::pair{1, 1}, std::pair{1, 2}, std::pair{-3, 5}}) {
    const E2CyclicModel m = e2cyclic_model(b, c);
    CHECK(m.section_residual().is_zero());
    CHECK(is_square(discriminant(m.curve.cubic())));
    CHECK(S6Surface(m.curve).contains(m.section(Rational(7, 3))));
  }
  CHECK_THROWS(e2cyclic_model(0, 1));
  CHECK_THROWS(e2cyclic_model(1, 0));
}

TEST_CASE("e2cyclic 2P curve") {
  testing::RationalSource src(101);
  int tested = 0;
  while (tested < 20) {
    const Rational b = src.nonzero(), c = src.nonzero(), T0 = src.nonzero();
    const E2CyclicModel m = e2cyclic_model(b, c);
    S6Point p;
    try {
      p = e2cyclic_2P_point(b, c, T0);
    } catch (const std::exception&) {
      continue;  // T0 at a pole of U
    }
    CHECK(S6Surface(m.curve).contains(p));
    CHECK(is_square(discriminant(intersection_cubic(m.curve, p.T, p.U))));
    ++tested;
  }
  for (auto [b, c, mm, n] : {std::array<long, 4>{1, 1, 3, 5}, {2, 3, 5, 7}, {1, 2, 1, 3}}) {
    const Rational T = Rational(c * n, mm) - 1;
    const auto r = point_to_sextic_field(e2cyclic_model(b, c).curve, e2cyclic_2P_point(b, c, T));
    REQUIRE(std::holds_alternative<SexticConstruction>(r));
    CHECK(std::get<SexticConstruction>(r).delta == e2cyclic_y_class(b, c, mm, n));
  }
}

TEST_CASE("family records") {
  const FamilyRecord r = isog3_record(1, 1, 2, 1);
  CHECK(r.family == FamilyTag::isog3);
  CHECK(r.point == S6Point{Rational(67, 4), Rational(189, 2), 1});
  CHECK(r.parameters.at("m") == 2);
  REQUIRE(std::holds_alternative<SexticConstruction>(r.construction));
  CHECK(std::get<SexticConstruction>(r.construction).delta == 67);
  CHECK(to_string(FamilyTag::e160b1) == "e160b1");
}
