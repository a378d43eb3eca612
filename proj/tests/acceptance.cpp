// Runs the ten acceptance criteria and prints one PASS/FAIL line for each.

#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include "sextic/census.hpp"
#include "sextic/factor.hpp"
#include "sextic/families.hpp"
#include "sextic/fibration.hpp"
#include "sextic/s6.hpp"

using namespace sextic;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

UniPoly ints(std::initializer_list<long> lowest_first) {
  std::vector<Rational> c;
  for (long v : lowest_first) c.emplace_back(v);
  return UniPoly(c);
}

BigInt ipow(long p, unsigned e) {
  BigInt out;
  mpz_ui_pow_ui(out.get_mpz_t(), static_cast<unsigned long>(p), e);
  return out;
}

bool singular(const Rational& A, const Rational& B) {
  return (Rational(4) * A * A * A + Rational(27) * B * B).is_zero();
}

Outcome delta_identity() {
  const MultiPoly formula = delta_formula_poly();
  const MultiPoly oracle = delta_oracle_poly();
  if (!multipoly_equal(formula, oracle)) return {false, "closed form differs from the oracle"};
  std::mt19937_64 rng(1);
  std::uniform_int_distribution<long> num(-1000, 1000), den(1, 97);
  for (int i = 0; i < 1000; ++i) {
    const Rational A(num(rng), den(rng)), B(num(rng), den(rng)), T(num(rng), den(rng)), U(num(rng), den(rng));
    const std::map<Var, Rational> at{{Var::A, A}, {Var::B, B}, {Var::T, T}, {Var::U, U}};
    const Rational f = delta_formula(A, B, T, U);
    if (f != oracle.evaluate(at) || f != formula.evaluate(at)) return {false, "evaluation " + std::to_string(i)};
  }
  return {true, "symbolic equality and 1000 evaluations"};
}

const SexticConstruction* as_construction(const PipelineResult& r) { return std::get_if<SexticConstruction>(&r); }

Outcome example_one() {
  const UniPoly f = ints({1, -4, 1, 1});
  const CyclicCubicField k3(f);
  const SexticField k6(k3, BigInt(-26));
  const EllipticCurve<SexticField> e(e160b1_curve(), k6);
  const CubicElement a4 = k3.generator() - k3.embed(4);
  const CubicElement sq = a4 * a4;
  const Point<SexticElement> P(k6.lift(sq * Rational(-1, 26)),
                               k6.make(k3.embed(0), (sq - k3.embed(5)) * Rational(1, 52)));
  if (!e.contains(P)) return {false, "displayed point is off the curve"};
  const auto r = point_to_sextic_field(e160b1_curve(), e160b1_point(3, 5));
  const auto* c = as_construction(r);
  if (!c) return {false, "pipeline degenerate"};
  if (c->delta != -26) return {false, "delta = " + c->delta.get_str()};
  if (!is_isomorphic_cubic(f, c->cubic)) return {false, "cubic field not isomorphic"};
  return {true, "point on curve over K3(sqrt(-26)); pipeline field certified"};
}

Outcome example_two() {
  const UniPoly f = ints({1, -3, 0, 1});
  const auto r = point_to_sextic_field(e160b1_curve(), e160b1_point(1, 1));
  const auto* c = as_construction(r);
  if (!c) return {false, "pipeline degenerate"};
  if (c->delta != -34) return {false, "delta = " + c->delta.get_str()};
  const IsomorphismResult iso = is_isomorphic_cubic(f, c->cubic);
  if (!iso) return {false, "cubic field not isomorphic"};
  // The pipeline point, carried into Q(beta, sqrt(-34)), lies on the curve.
  const CyclicCubicField kb(f);
  const SexticField k6(kb, BigInt(-34));
  const EllipticCurve<SexticField> e(e160b1_curve(), k6);
  const auto& im = iso.embedding->image;
  const CubicElement x = kb.element(im[0], im[1], im[2]) * c->scale.inverse();
  const Point<SexticElement> P(k6.lift(x), k6.make(kb.embed(0), (x - kb.embed(c->input.T)) * c->slope));
  if (!e.contains(P)) return {false, "point off the curve over Q(beta, sqrt(-34))"};
  const UniPoly shown = ints({289, 1836, 3204, 1224});
  if (e160b1_cubic(5, 1).monic() != shown.monic()) return {false, "displayed cubic is not the (5, 1) cubic"};
  const BigInt expected = ipow(2, 6) * ipow(3, 6) * ipow(17, 2) * ipow(163, 2);
  if (discriminant(shown) != Rational(expected)) return {false, "discriminant " + discriminant(shown).str()};
  return {true, "delta -34, field certified, discriminant 2^6 3^6 17^2 163^2"};
}

struct Isog3Draw {
  long a, b, m, n;
};

// Random (a, b, m, n) with a nonsingular curve, gcd(m, n) = 1 and
// m^2 + 3n^2 square-free and > 1.
Isog3Draw draw_isog3(std::mt19937_64& rng) {
  std::uniform_int_distribution<long> ab(-12, 12), mm(-40, 40), nn(1, 40);
  for (;;) {
    const Isog3Draw d{ab(rng), ab(rng), mm(rng), nn(rng)};
    if (d.a == 0 || d.b == 0 || d.m == 0 || std::gcd(d.m, d.n) != 1) continue;
    if (!isog3_curve(d.a, d.b).is_nonsingular()) continue;
    const BigInt c = BigInt(d.m * d.m + 3 * d.n * d.n);
    if (c > 1 && is_squarefree(c)) return d;
  }
}

std::string tag(const Isog3Draw& d) {
  return "(" + std::to_string(d.a) + "," + std::to_string(d.b) + "," + std::to_string(d.m) + "," +
         std::to_string(d.n) + ")";
}

Outcome pipeline_sweep() {
  std::mt19937_64 rng(4);
  int built = 0, degenerate = 0;
  while (built < 50) {
    const Isog3Draw d = draw_isog3(rng);
    const auto r = point_to_sextic_field(isog3_curve(d.a, d.b), isog3_point(d.a, d.b, d.m, d.n));
    const auto* c = as_construction(r);
    if (!c) {
      ++degenerate;
      continue;
    }
    ++built;
    const auto& z = c->certificates;
    if (!(z.cubic_irreducible && z.disc_square && z.rho_order_six && z.on_curve && z.trace_zero &&
          z.half_turn_negates && z.alternate_sum_zero && z.infinite_order_heuristic)) {
      return {false, "certificate failed at " + tag(d)};
    }
    if (!c->infinite_order.result || c->infinite_order.vanishing_multiple != 0) {
      return {false, "kP = O for some k <= 36 at " + tag(d)};
    }
    // Recheck on the stored orbit: P + rho^2 P + rho^4 P = O and rho^3 P = -P.
    const EllipticCurve<SexticField> e(c->curve, c->k6);
    if (!e.add(e.add(c->orbit[0], c->orbit[2]), c->orbit[4]).is_infinity()) {
      return {false, "alternate sum nonzero at " + tag(d)};
    }
    if (c->orbit[3] != e.neg(c->orbit[0])) return {false, "rho^3 P != -P at " + tag(d)};
  }
  return {true, "50 constructions certified (" + std::to_string(degenerate) + " degenerate draws skipped)"};
}

Outcome isog3_consistency() {
  std::mt19937_64 rng(5);
  int built = 0, degenerate = 0;
  while (built < 50) {
    const Isog3Draw d = draw_isog3(rng);
    const auto r = point_to_sextic_field(isog3_curve(d.a, d.b), isog3_point(d.a, d.b, d.m, d.n));
    const auto* c = as_construction(r);
    if (!c) {
      ++degenerate;
      continue;
    }
    ++built;
    const ConductorData cd = isog3_conductors(d.a, d.b, d.m, d.n);
    if (c->delta != squarefree_part(Rational(cd.quad_disc))) return {false, "delta class differs at " + tag(d)};
    if (!is_isomorphic_cubic(c->cubic, isog3_cubic(d.m, d.n).monic())) {
      return {false, "cubic field differs at " + tag(d)};
    }
  }
  return {true, "50 parameter sets agree (" + std::to_string(degenerate) + " degenerate draws skipped)"};
}

Outcome fibration_identities() {
  if (!psi3_zero_identity()) return {false, "psi3(0) not identically zero"};
  std::mt19937_64 rng(6);
  std::uniform_int_distribution<long> num(-40, 40), den(1, 9);
  int done = 0;
  while (done < 20) {
    const Rational A(num(rng), den(rng)), B(num(rng), den(rng));
    if (singular(A, B)) continue;
    ++done;
    if (!check_T3_torsion(A, B).all()) return {false, "T3 identity fails at A=" + A.str() + " B=" + B.str()};
    if (!check_Pinf_on_curve(A, B).all()) return {false, "P_inf identity fails at A=" + A.str() + " B=" + B.str()};
  }
  done = 0;
  while (done < 10) {
    const Rational A(num(rng), den(rng)), B(num(rng), den(rng));
    if (A.is_zero() || singular(A, B)) continue;
    ++done;
    const FiberProfile fp = fiber_profile(A, B);
    if (!fp.standard_pattern || fp.finite_degree != 18 || fp.infinity_order != 6) {
      return {false, "non-standard fiber profile at A=" + A.str() + " B=" + B.str()};
    }
  }
  return {true, "symbolic psi3, 20 section checks, 10 fiber profiles"};
}

Outcome isogeny_counts() {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<long> num(-30, 30), den(1, 4);
  const std::vector<long> primes{5, 7, 11, 13, 17};
  int done = 0, controls_failed = 0;
  while (done < 10) {
    const Rational A(num(rng), den(rng)), B(num(rng), den(rng)), T0(num(rng), den(rng));
    if (singular(A, B)) continue;
    const IsogenyCheck chk = isogeny_pointcount_check(A, B, T0, primes);
    int compared = 0;
    for (const auto& p : chk.primes) compared += p.skipped ? 0 : 1;
    if (compared == 0) continue;
    ++done;
    if (!chk.counts_agree) {
      return {false, "counts differ at A=" + A.str() + " B=" + B.str() + " T0=" + T0.str()};
    }
    if (!isogeny_pointcount_check(A, B, T0, primes, true).counts_agree) ++controls_failed;
  }
  if (controls_failed == 0) return {false, "perturbed control never disagreed"};
  return {true, "10 specializations agree; perturbed control disagreed in " + std::to_string(controls_failed)};
}

Outcome census_growth() {
  CensusConfig cfg;
  cfg.limit = 1'000'000;
  cfg.grid = {10'000, 100'000, 1'000'000};
  cfg.workers = 1;
  const CensusReport serial = run_census(cfg);
  cfg.workers = 4;
  const CensusReport parallel = run_census(cfg);
  if (serial.values != parallel.values) return {false, "parallel and serial sets differ"};
  if (!serial.slope) return {false, "no slope"};
  const double s = *serial.slope;
  char buf[160];
  std::snprintf(buf, sizeof buf, "V = %llu, %llu, %llu; slope %.4f; serial %.2f s, parallel %.2f s",
                static_cast<unsigned long long>(serial.counts[0].count),
                static_cast<unsigned long long>(serial.counts[1].count),
                static_cast<unsigned long long>(serial.counts[2].count), s, serial.wall_seconds,
                parallel.wall_seconds);
  return {s >= 0.4 && s <= 0.6, buf};
}

// Random curve through two random rational points.
Outcome cover_and_twist() {
  if (!s3_cover_identity().holds) return {false, "S3 cover identity fails"};
  std::mt19937_64 rng(9);
  std::uniform_int_distribution<long> num(-20, 20), den(1, 5), dl(-30, 30);
  int done = 0;
  while (done < 100) {
    const Rational x1(num(rng), den(rng)), y1(num(rng), den(rng)), x2(num(rng), den(rng)), y2(num(rng), den(rng));
    if (x1 == x2) continue;
    const Rational A = ((y1 * y1 - x1 * x1 * x1) - (y2 * y2 - x2 * x2 * x2)) / (x1 - x2);
    const Rational B = y1 * y1 - x1 * x1 * x1 - A * x1;
    if (singular(A, B)) continue;
    const long delta = dl(rng);
    if (delta == 0 || delta == 1 || !is_squarefree(BigInt(delta))) continue;
    const CurveModel e = CurveModel::weierstrass(A, B);
    S6Point q;
    try {
      q = s6_point_from_pair(e, Point<Rational>(x1, y1), Point<Rational>(x2, y2));
    } catch (const std::invalid_argument&) {
      continue;  // line through the chart boundary
    }
    if (!S6Surface(e).contains(q)) return {false, "pair point off the surface"};
    ++done;
    const S6Point moved = twist_transport_inverse(e, delta, q);
    if (!S6Surface(e.twist(delta)).contains(moved)) return {false, "point off the twisted surface"};
    const S6Point back = twist_transport(e, delta, moved);
    if (back != q || !S6Surface(e).contains(back)) return {false, "roundtrip failed"};
  }
  return {true, "cover identity and 100 twist roundtrips"};
}

Outcome stabilizers() {
  const EllipticCurve<RationalField> e(CurveModel::weierstrass(0, 1), RationalField{});
  using RP = Point<Rational>;
  const bool ok = stabilizer_class(e, {RP::infinity(), RP::infinity()}) == StabilizerClass::full &&
                  stabilizer_class(e, {RP(0, 1), RP(0, -1)}) == StabilizerClass::order3 &&
                  stabilizer_class(e, {RP(-1, 0), RP(-1, 0)}) == StabilizerClass::order2 &&
                  stabilizer_class(e, {RP(2, 3), RP(0, 1)}) == StabilizerClass::free;
  return {ok, "full, order3, order2, free"};
}

struct Criterion {
  int id;
  std::string name;
  double budget_seconds;
  std::function<Outcome()> run;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "delta identity", 5, delta_identity},
      {2, "160b1 example with delta -26", 10, example_one},
      {3, "160b1 example with delta -34", 10, example_two},
      {4, "pipeline soundness sweep", 120, pipeline_sweep},
      {5, "isog3 family consistency", 0, isog3_consistency},
      {6, "fibration identities", 30, fibration_identities},
      {7, "isogenous model point counts", 0, isogeny_counts},
      {8, "census growth", 60, census_growth},
      {9, "cover and twist", 0, cover_and_twist},
      {10, "stabilizer classes", 0, stabilizers},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& ex) {
      o = {false, std::string("exception: ") + ex.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (c.budget_seconds > 0 && secs > c.budget_seconds) {
      o.pass = false;
      o.detail += "; over the " + std::to_string(static_cast<int>(c.budget_seconds)) + " s budget";
    }
    if (!o.pass) ++failures;
    std::printf("criterion %2d %s: %s (%.2f s) %s\n", c.id, o.pass ? "PASS" : "FAIL", c.name.c_str(), secs,
                o.detail.c_str());
    std::fflush(stdout);
  }
  return failures == 0 ? 0 : 1;
}
