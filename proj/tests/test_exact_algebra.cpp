#include <doctest.h>

#include <stdexcept>

#include "sextic/factor.hpp"
#include "sextic/multipoly.hpp"
#include "sextic/rational.hpp"
#include "sextic/s6.hpp"
#include "sextic/unipoly.hpp"
#include "test_support.hpp"

using namespace sextic;

namespace {

UniPoly ints(std::initializer_list<long> lowest_first) {
  std::vector<Rational> c;
  for (long v : lowest_first) c.emplace_back(v);
  return UniPoly(c);
}

}  // namespace

TEST_CASE("rational parsing is exact and canonical") {
  CHECK(Rational::parse("6/4") == Rational(3, 2));
  CHECK(Rational::parse("-7") == Rational(-7));
  CHECK(Rational::parse("3/-6") == Rational(-1, 2));
  CHECK(Rational::parse("123456789012345678901234567890/10").str() == "12345678901234567890123456789");
  CHECK_THROWS(Rational::parse("1.5"));
  CHECK_THROWS(Rational::parse("1/0"));
  CHECK_THROWS(Rational::parse(""));
  CHECK_THROWS_AS(Rational(1) / Rational(0), std::domain_error);
}

TEST_CASE("rational arithmetic, ordering and helpers") {
  const Rational a(3, 4), b(-5, 6);
  CHECK(a + b == Rational(-1, 12));
  CHECK(a * b == Rational(-5, 8));
  CHECK(a / b == Rational(-9, 10));
  CHECK(b < a);
  CHECK(pow(Rational(-2, 3), 3) == Rational(-8, 27));
  CHECK(floor(Rational(-7, 2)) == -4);
  CHECK(floor(Rational(7, 2)) == 3);
  CHECK(Rational(-3, 7).abs() == Rational(3, 7));
  CHECK(Rational(255, 256).height_bits() == 9);
}

TEST_CASE("is_square and exact_sqrt") {
  CHECK(is_square(Rational(20736)));
  CHECK(is_square(Rational(0)));
  CHECK_FALSE(is_square(Rational(-28)));
  CHECK(is_square(Rational(169, 4)));
  CHECK_FALSE(is_square(Rational(2, 9)));
  CHECK(exact_sqrt(Rational(169, 4)) == Rational(13, 2));
  CHECK_FALSE(exact_sqrt(Rational(3)).has_value());
}

TEST_CASE("squarefree_part keeps the sign") {
  CHECK(squarefree_part(Rational(169, 4)) == 1);
  CHECK(squarefree_part(Rational(-175, 26)) == -182);
  CHECK(squarefree_part(Rational(67, 4)) == 67);
  CHECK(squarefree_part(Rational(-1)) == -1);
  CHECK_THROWS(squarefree_part(Rational(0)));
}

TEST_CASE("squarefree_part property: q / part is a square") {
  testing::RationalSource src(11, 5000, 5000);
  for (int i = 0; i < 200; ++i) {
    const Rational q = src.nonzero();
    const BigInt s = squarefree_part(q);
    CHECK(is_squarefree(s));
    CHECK(is_square(q / Rational(s)));
  }
}

TEST_CASE("factorization") {
  const auto f = factorize(BigInt(-360));
  REQUIRE(f.size() == 3);
  CHECK(f[0].prime == 2);
  CHECK(f[0].exponent == 3);
  CHECK(f[1].prime == 3);
  CHECK(f[1].exponent == 2);
  CHECK(f[2].prime == 5);
  CHECK(factorize(BigInt(1)).empty());
  CHECK_THROWS(factorize(BigInt(0)));
  // Two primes beyond the trial-division table.
  const BigInt p("1000000007"), q("998244353");
  const auto g = factorize(BigInt(p * p * q));
  REQUIRE(g.size() == 2);
  CHECK(g[0].prime == q);
  CHECK(g[1].prime == p);
  CHECK(g[1].exponent == 2);
  CHECK(valuation(BigInt(250), BigInt(5)) == 3);
  CHECK(is_squarefree(BigInt(469)));
  CHECK_FALSE(is_squarefree(BigInt(160)));
}

TEST_CASE("cubic discriminants") {
  CHECK(cubic_discriminant(ints({1, -4, 1, 1})) == 169);
  CHECK(cubic_discriminant(ints({0, 0, 0, 1})) == 0);
  CHECK(cubic_discriminant(ints({1, -3, 0, 1})) == 81);
  CHECK_THROWS(cubic_discriminant(ints({1, 1})));
  testing::RationalSource src(5);
  for (int i = 0; i < 30; ++i) {
    const UniPoly p({src.next(), src.next(), src.next(), src.nonzero()});
    CHECK(cubic_discriminant(p) == discriminant(p));
  }
}

TEST_CASE("polynomial division, gcd and resultant") {
  const UniPoly a = ints({-1, 0, 0, 1});  // x^3 - 1
  const UniPoly b = ints({-1, 1});        // x - 1
  const auto [q, r] = divmod(a, b);
  CHECK(q == ints({1, 1, 1}));
  CHECK(r.is_zero());
  CHECK(gcd(a, ints({-1, 0, 1})) == b);
  const Xgcd x = xgcd(ints({1, 0, 1}), ints({0, 1, 1}));
  CHECK(x.g == ints({1}));
  CHECK(x.s * ints({1, 0, 1}) + x.t * ints({0, 1, 1}) == x.g);
  // Res(x^2 + 1, x - 2) = 5.
  CHECK(resultant(ints({1, 0, 1}), ints({-2, 1})) == 5);
  CHECK(ints({1, 2, 3}).shift(1) == ints({6, 8, 3}));
  CHECK(ints({1, 2, 3}).reversed() == ints({3, 2, 1}));
}

TEST_CASE("square-free decomposition") {
  const UniPoly p = pow(ints({-1, 1}), 3) * pow(ints({2, 1}), 2);
  const auto d = squarefree_decomposition(p);
  REQUIRE(d.factors.size() == 2);
  CHECK(d.factors[0].factor == ints({2, 1}));
  CHECK(d.factors[0].multiplicity == 2);
  CHECK(d.factors[1].factor == ints({-1, 1}));
  CHECK(d.factors[1].multiplicity == 3);
  CHECK(reassemble(d) == p);

  const auto e = squarefree_decomposition(ints({1, 0, 1}));
  REQUIRE(e.factors.size() == 1);
  CHECK(e.factors[0].multiplicity == 1);

  const auto f = squarefree_decomposition(ints({0, 0, 0, 1}));
  REQUIRE(f.factors.size() == 1);
  CHECK(f.factors[0].factor == ints({0, 1}));
  CHECK(f.factors[0].multiplicity == 3);
  CHECK_THROWS(squarefree_decomposition(UniPoly()));
}

TEST_CASE("real root isolation and rational roots") {
  const UniPoly p = ints({1, -3, 0, 1});
  const auto roots = isolate_real_roots(p);
  CHECK(roots.size() == 3);
  CHECK(rational_roots(p).empty());
  const UniPoly q = ints({-6, 11, -6, 1}) * ints({1, 0, 1});  // (x-1)(x-2)(x-3)(x^2+1)
  const auto r = rational_roots(q);
  REQUIRE(r.size() == 3);
  CHECK(r[0] == 1);
  CHECK(r[2] == 3);
  const UniPoly s({Rational(-2), Rational(0), Rational(9)});  // 9x^2 - 2
  CHECK_FALSE(has_rational_root(s));
  CHECK(rational_roots(UniPoly({Rational(-1), Rational(0), Rational(4)})) ==
        std::vector<Rational>{Rational(-1, 2), Rational(1, 2)});
}

TEST_CASE("interpolation reproduces a polynomial") {
  const UniPoly p = ints({3, -1, 4, 1, -5});
  std::vector<Rational> xs, ys;
  for (int i = -2; i <= 2; ++i) {
    xs.emplace_back(i);
    ys.push_back(p(Rational(i)));
  }
  CHECK(interpolate(xs, ys) == p);
}

TEST_CASE("primitive integer form") {
  const UniPoly p({Rational(1, 2), Rational(-1, 3), Rational(2, 5)});
  const IntegerPoly ip = primitive_integer(p);
  CHECK(from_integers(ip.coeffs) * ip.scale == p);
  CHECK(ip.coeffs.back() > 0);
}

TEST_CASE("multipoly equality and substitution") {
  const MultiPoly A = MultiPoly::var(Var::A), B = MultiPoly::var(Var::B);
  const MultiPoly p = (A + B) * (A - B);
  CHECK(multipoly_equal(p, A * A - B * B));
  CHECK_FALSE(multipoly_equal(p, p + MultiPoly(1)));
  CHECK(multipoly_equal(MultiPoly(), MultiPoly(0)));
  CHECK(multipoly_equal(p.substitute(Var::B, A), MultiPoly()));
  CHECK(p.evaluate({{Var::A, Rational(3)}, {Var::B, Rational(1, 2)}}) == Rational(35, 4));
  CHECK(p.degree_in(Var::A) == 2);
  CHECK(multipoly_equal(p.coefficient_of(Var::A, 2), MultiPoly(1)));
  const MultiPoly t = MultiPoly::var(Var::t);
  const MultiPoly laurent = MultiPoly::var(Var::T, -2) * A;
  CHECK(multipoly_equal(laurent.substitute(Var::T, t * MultiPoly(2)),
                        MultiPoly::monomial(Rational(1, 4), {{Var::t, -2}, {Var::A, 1}})));
}

TEST_CASE("delta closed form equals the discriminant oracle") {
  CHECK(multipoly_equal(delta_formula_poly(), delta_oracle_poly()));
}
