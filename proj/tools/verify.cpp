#include <functional>
#include <map>
#include <random>
#include <stdexcept>

#include "cli.hpp"
#include "sextic/factor.hpp"
#include "sextic/families.hpp"
#include "sextic/fibration.hpp"
#include "sextic/s6.hpp"
#include "sextic/serialize.hpp"

namespace sextic::cli {

namespace {

using Checks = std::vector<Check>;

UniPoly integer_poly(std::initializer_list<long> lowest_first) {
  std::vector<Rational> c;
  for (long v : lowest_first) c.emplace_back(v);
  return UniPoly(c);
}

BigInt prime_power_product(std::initializer_list<std::pair<long, unsigned>> f) {
  BigInt out = 1;
  for (auto [p, e] : f) {
    BigInt pe;
    mpz_ui_pow_ui(pe.get_mpz_t(), static_cast<unsigned long>(p), e);
    out *= pe;
  }
  return out;
}

const SexticConstruction& expect_construction(const PipelineResult& r) {
  if (const auto* d = std::get_if<Degenerate>(&r)) {
    throw std::runtime_error("pipeline degenerate: " + to_string(d->kind) + " (" + d->detail + ")");
  }
  return std::get<SexticConstruction>(r);
}

// The y-coordinate of the pipeline point is slope (x - T) sqrt(delta); the
// displayed relation is y = sqrt(delta) (p x + q) / r up to sign.
bool y_relation_matches(const SexticConstruction& c, const Rational& p, const Rational& q, const Rational& r) {
  const Rational T = c.input.T;
  // slope (x - T) = +-(p x + q)/r as linear forms in x.
  const bool plus = c.slope == p / r && -c.slope * T == q / r;
  const bool minus = -c.slope == p / r && c.slope * T == q / r;
  return plus || minus;
}

Checks example_160b1_1() {
  Checks out;
  const UniPoly f = integer_poly({1, -4, 1, 1});  // alpha^3 + alpha^2 - 4 alpha + 1
  const CyclicCubicField k3(f);
  const SexticField k6(k3, BigInt(-26));
  const EllipticCurve<SexticField> e(e160b1_curve(), k6);
  const CubicElement a4 = k3.generator() - k3.embed(4);
  const CubicElement sq = a4 * a4;
  const Point<SexticElement> P(k6.lift(sq * Rational(-1, 26)),
                               k6.make(k3.embed(0), (sq - k3.embed(5)) * Rational(1, 52)));
  out.push_back({"displayed point lies on y^2 = x^3 - 4x^2 - x over Q(alpha, sqrt(-26))", e.contains(P)});

  const auto res = point_to_sextic_field(e160b1_curve(), e160b1_point(3, 5));
  const auto& c = expect_construction(res);
  out.push_back({"pipeline at m/n = 3/5 has delta = -26", c.delta == -26});
  out.push_back({"pipeline cubic field is Q[x]/(x^3 + x^2 - 4x + 1)", bool(is_isomorphic_cubic(f, c.cubic))});
  const UniPoly shown = integer_poly({25, 156, 260, 104});
  out.push_back({"displayed cubic 104x^3 + 260x^2 + 156x + 25 is the intersection cubic",
                 shown.monic() == c.intersection.monic()});
  out.push_back({"its discriminant is 2^6 13^2 47^2",
                 discriminant(shown) == Rational(prime_power_product({{2, 6}, {13, 2}, {47, 2}}))});
  out.push_back({"y = sqrt(-26)(26x + 5)/52", y_relation_matches(c, 26, 5, 52)});
  out.push_back({"13 is the only certified ramified prime of K3",
                 c.conductor.determined == 13 && c.conductor.ambiguous.empty()});
  out.push_back({"13 divides 3m^2 + 25n^2 exactly once at (3, 1)",
                 e160b1_ramification(3, 1, 13) == Ramification::ramified});
  out.push_back({"pipeline certificates", c.certificates.all()});
  return out;
}

Checks example_160b1_2() {
  Checks out;
  const UniPoly f = integer_poly({1, -3, 0, 1});  // beta^3 - 3 beta + 1
  const auto res = point_to_sextic_field(e160b1_curve(), e160b1_point(1, 1));
  const auto& c = expect_construction(res);
  out.push_back({"pipeline at m/n = 1/1 has delta = -34", c.delta == -34});
  const IsomorphismResult iso = is_isomorphic_cubic(f, c.cubic);
  out.push_back({"pipeline cubic field is Q[x]/(x^3 - 3x + 1)", bool(iso)});
  const UniPoly shown = integer_poly({289, 1836, 3204, 1224});
  out.push_back({"displayed cubic 1224x^3 + 3204x^2 + 1836x + 289 is the intersection cubic",
                 shown.monic() == c.intersection.monic()});
  out.push_back({"its discriminant is 2^6 3^6 17^2 163^2",
                 discriminant(shown) == Rational(prime_power_product({{2, 6}, {3, 6}, {17, 2}, {163, 2}}))});
  out.push_back({"y = sqrt(-34)(90x + 17)/204", y_relation_matches(c, 90, 17, 204)});
  if (iso) {
    // Carry the pipeline point into Q(beta, sqrt(-34)).
    const CyclicCubicField kb(f);
    const SexticField k6(kb, BigInt(-34));
    const EllipticCurve<SexticField> e(e160b1_curve(), k6);
    const auto& im = iso.embedding->image;
    const CubicElement x = kb.element(im[0], im[1], im[2]) * c.scale.inverse();
    const CubicElement yb = (x - kb.embed(c.input.T)) * c.slope;
    const Point<SexticElement> P(k6.lift(x), k6.make(kb.embed(0), yb));
    out.push_back({"pipeline point lies on the curve over Q(beta, sqrt(-34))", e.contains(P)});
  }
  out.push_back({"3 is the only prime of K3 left for the ramification test",
                 c.conductor.determined == 1 && c.conductor.ambiguous == std::vector<BigInt>{BigInt(3)}});
  out.push_back({"pipeline certificates", c.certificates.all()});
  return out;
}

// The closed form printed for this example does not satisfy the curve; kept
// as an informational item so the discrepancy stays visible.
Checks example_160b1_2_displayed_point() {
  const UniPoly f = integer_poly({1, -3, 0, 1});
  const CyclicCubicField kb(f);
  const SexticField k6(kb, BigInt(-34));
  const EllipticCurve<SexticField> e(e160b1_curve(), k6);
  const CubicElement b = kb.generator();
  const CubicElement den = (b * Rational(15) + kb.embed(43)).inverse();
  const CubicElement x = (b - kb.embed(8)) * den * Rational(-17, 6);
  const CubicElement yb = (b - kb.embed(8)) * den * Rational(5, 4) + kb.embed(Rational(1, 12));
  const Point<SexticElement> P(k6.lift(x), k6.make(kb.embed(0), yb));
  const CubicElement v = ((x * Rational(1224) + kb.embed(3204)) * x + kb.embed(1836)) * x + kb.embed(289);
  return {{"displayed closed-form point lies on the curve", e.contains(P)},
          {"its x-coordinate is a root of the displayed cubic", v.is_zero()}};
}

Checks fibration_identities() {
  Checks out;
  out.push_back({"psi3(0) = 4 a2 a6 - a4^2 vanishes in Q[A, B, T]", psi3_zero_identity()});
  out.push_back({"T3 on the curve in Q[A, B, T]", t3_identity()});
  out.push_back({"P_inf on the curve in Q[A, B, T]", pinf_identity()});
  out.push_back({"(U, D) to (X, Y) substitution identity", uv_xy_identity()});
  out.push_back({"T3 and P_inf checks at (A, B) = (2, 3)",
                 check_T3_torsion(2, 3).all() && check_Pinf_on_curve(2, 3).all()});
  out.push_back({"fiber profile at (A, B) = (1, 1) is q/4 cubed, g squared, order 6 at infinity",
                 fiber_profile(1, 1).standard_pattern});
  const std::vector<long> primes{5, 7, 11, 13, 17};
  out.push_back({"point counts agree with the isogenous model at (1, 2, 3)",
                 isogeny_pointcount_check(1, 2, 3, primes).counts_agree});
  out.push_back({"perturbed isogenous model disagrees",
                 !isogeny_pointcount_check(1, 2, 3, primes, true).counts_agree});
  return out;
}

Checks isog3_reconciliation() {
  Checks out;
  const std::vector<std::array<long, 4>> params{{1, 1, 2, 1}, {2, 3, 1, 2}, {-1, 2, 3, 1}, {3, 1, 5, 2}};
  for (const auto& [a, b, m, n] : params) {
    const std::string tag = "(a, b, m, n) = (" + std::to_string(a) + ", " + std::to_string(b) + ", " +
                            std::to_string(m) + ", " + std::to_string(n) + ")";
    const FamilyRecord r = isog3_record(a, b, m, n);
    const auto& c = expect_construction(r.construction);
    out.push_back({"certificates at " + tag, c.certificates.all()});
    out.push_back({"delta is the class of 9bm^2 + (4a + 27b)n^2 at " + tag,
                   c.delta == squarefree_part(Rational(r.conductor.quad_disc))});
    out.push_back({"cubic field matches 12n^2x^3 - 9(m^2 + 3n^2)x^2 + ... at " + tag,
                   bool(is_isomorphic_cubic(c.cubic, isog3_cubic(m, n).monic()))});
  }
  return out;
}

Checks e160b1_reconciliation() {
  Checks out;
  const std::vector<std::array<long, 2>> params{{3, 5}, {1, 1}, {2, 7}, {4, 3}};
  for (const auto& [m, n] : params) {
    const std::string tag = "m/n = " + std::to_string(m) + "/" + std::to_string(n);
    const auto res = point_to_sextic_field(e160b1_curve(), e160b1_point(m, n));
    const auto& c = expect_construction(res);
    const auto [lm, ln] = e160b1_cubic_parameters(m, n);
    out.push_back({"intersection cubic is 36FGx^3 + 9F(11m^2 + 81n^2)x^2 + 54FGx + 25G^2 at " + tag,
                   c.intersection.monic() == e160b1_cubic(lm, ln).monic()});
    out.push_back({"delta is the class of -GF at " + tag, c.delta == e160b1_quadratic_class(lm, ln)});
  }
  return out;
}

Checks e2cyclic_reconciliation() {
  Checks out;
  const std::vector<std::array<long, 4>> params{{1, 1, 3, 5}, {2, 3, 5, 7}, {1, 2, 1, 3}};
  for (const auto& [b, c, m, n] : params) {
    const std::string tag = "(b, c, m, n) = (" + std::to_string(b) + ", " + std::to_string(c) + ", " +
                            std::to_string(m) + ", " + std::to_string(n) + ")";
    out.push_back({"section residual vanishes at " + tag, e2cyclic_model(b, c).section_residual().is_zero()});
    const Rational T = Rational(c * n, m) - 1;
    const S6Point p = e2cyclic_2P_point(b, c, T);
    const auto res = point_to_sextic_field(e2cyclic_model(b, c).curve, p);
    const auto& sc = expect_construction(res);
    out.push_back({"2P curve point certifies at " + tag, sc.certificates.all()});
    out.push_back({"y class matches the closed form at " + tag, sc.delta == e2cyclic_y_class(b, c, m, n)});
  }
  return out;
}

Checks cover_and_twist() {
  Checks out;
  out.push_back({"S3 cover identity T D^2 - rhs = -(u/t)^3 (d^2 - s3 rhs)", s3_cover_identity().holds});
  const CurveModel e33 = isog3_curve(1, 1);
  const S6Point q = isog3_point(1, 1, 1, 1);
  const S6Point moved = twist_transport_inverse(e33, 5, q);
  out.push_back({"twist transport roundtrip", twist_transport(e33, 5, moved) == q});
  out.push_back({"transported point on the twisted surface", S6Surface(e33.twist(5)).contains(moved)});
  return out;
}

using Runner = std::function<Checks()>;

struct Entry {
  std::string name;
  bool gating;
  Runner run;
};

const std::vector<Entry>& registry() {
  static const std::vector<Entry> entries{
      {"example-160b1-1", true, example_160b1_1},
      {"example-160b1-2", true, example_160b1_2},
      {"example-160b1-2-displayed-point", false, example_160b1_2_displayed_point},
      {"delta-identity", true, [] { return verify_delta_identity(delta_formula_poly()).checks; }},
      {"fibration-identities", true, fibration_identities},
      {"isog3-reconciliation", true, isog3_reconciliation},
      {"e160b1-reconciliation", true, e160b1_reconciliation},
      {"e2cyclic-reconciliation", true, e2cyclic_reconciliation},
      {"cover-and-twist", true, cover_and_twist},
  };
  return entries;
}

}  // namespace

bool VerifyItem::passed() const {
  if (!error.empty() || checks.empty()) return false;
  for (const auto& c : checks) {
    if (!c.holds) return false;
  }
  return true;
}

std::vector<std::string> verify_item_names() {
  std::vector<std::string> out;
  for (const auto& e : registry()) out.push_back(e.name);
  return out;
}

VerifyItem run_verify_item(const std::string& name) {
  for (const auto& e : registry()) {
    if (e.name != name) continue;
    VerifyItem item{e.name, e.gating, {}, {}};
    try {
      item.checks = e.run();
    } catch (const std::exception& ex) {
      item.error = ex.what();
    }
    return item;
  }
  throw std::out_of_range("unknown verify item: " + name);
}

std::vector<VerifyItem> verify_suite() {
  std::vector<VerifyItem> out;
  for (const auto& e : registry()) out.push_back(run_verify_item(e.name));
  return out;
}

bool suite_passed(const std::vector<VerifyItem>& items) {
  for (const auto& i : items) {
    if (i.gating && !i.passed()) return false;
  }
  return true;
}

VerifyItem verify_delta_identity(const MultiPoly& formula) {
  VerifyItem item{"delta-identity", true, {}, {}};
  const MultiPoly oracle = delta_oracle_poly();
  item.checks.push_back({"closed form equals the discriminant of the intersection cubic in Q[A, B, T, U]",
                         multipoly_equal(formula, oracle)});
  std::mt19937_64 rng(20240607);
  std::uniform_int_distribution<long> num(-50, 50), den(1, 20);
  bool agree = true;
  for (int i = 0; i < 200 && agree; ++i) {
    const Rational A(num(rng), den(rng)), B(num(rng), den(rng)), T(num(rng), den(rng)), U(num(rng), den(rng));
    const std::map<Var, Rational> at{{Var::A, A}, {Var::B, B}, {Var::T, T}, {Var::U, U}};
    agree = formula.evaluate(at) == oracle.evaluate(at);
  }
  item.checks.push_back({"200 random rational evaluations agree", agree});
  return item;
}

MultiPoly delta_formula_sign_flipped() {
  const MultiPoly f = delta_formula_poly();
  const auto& [exps, coeff] = *f.terms().begin();
  return f - MultiPoly(coeff * Rational(2)).shifted(exps);
}

nlohmann::json to_json(const VerifyItem& item) {
  nlohmann::json checks = nlohmann::json::array();
  for (const auto& c : item.checks) checks.push_back({{"name", c.name}, {"holds", c.holds}});
  nlohmann::json out{{"item", item.name}, {"gating", item.gating}, {"passed", item.passed()}, {"checks", checks}};
  if (!item.error.empty()) out["error"] = item.error;
  return out;
}

}  // namespace sextic::cli
