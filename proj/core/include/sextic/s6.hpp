#pragma once

#include <array>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "sextic/ecurve.hpp"
#include "sextic/multipoly.hpp"
#include "sextic/numfield.hpp"

namespace sextic {

struct S6Point {
  Rational U;
  Rational D;
  Rational T;
  friend bool operator==(const S6Point&, const S6Point&) = default;
};

// Discriminant Delta(A, B, T, U) of T x^3 - U x^2 + T(A + 2U) x + T(B - TU),
// written out in closed form.
Rational delta_formula(const Rational& A, const Rational& B, const Rational& T, const Rational& U);
MultiPoly delta_formula_poly();
// The same quantity computed as the generic cubic discriminant of the
// intersection cubic with symbolic coefficients.
MultiPoly delta_oracle_poly();

// Right-hand side of T D^2 = ... for y^2 = x^3 + A x + B, in closed form.
MultiPoly s6_weierstrass_rhs_poly();
Rational s6_weierstrass_rhs(const Rational& A, const Rational& B, const Rational& T, const Rational& U);

// T*g(x)/c - U*(x - T)^2.
UniPoly intersection_cubic(const CurveModel& e, const Rational& T, const Rational& U);

// Sextic in y whose roots are the y-coordinates of E meeting the conic
// T y^2 = U (x - T)^2, for y^2 = x^3 + A x + B.
UniPoly sextic_poly(const Rational& A, const Rational& B, const Rational& T, const Rational& U);

// The surface T*D^2 = disc(T*g(x) - c*U*(x - T)^2) / T attached to
// c*y^2 = g(x). For Weierstrass input this is the closed form above.
class S6Surface {
 public:
  explicit S6Surface(CurveModel e);

  const CurveModel& curve() const { return curve_; }
  // T * D^2 on the surface; T must be nonzero.
  Rational rhs(const Rational& T, const Rational& U) const;
  // T*D^2 - rhs; T == 0 is rejected.
  Rational residual(const S6Point& p) const;
  bool contains(const S6Point& p) const { return residual(p).is_zero(); }
  // Nonnegative D with (U, D, T) on the surface, if rational.
  std::optional<Rational> solve_D(const Rational& T, const Rational& U) const;

 private:
  CurveModel curve_;
};

S6Surface s6_model(const CurveModel& e);

// The four possible Galois behaviours of a pair (P, Q).
enum class OrbitCase { rational = 1, quadratic = 2, cubic = 3, sextic = 4 };

std::string to_string(OrbitCase c);

struct OrbitClassification {
  OrbitCase kind = OrbitCase::sextic;
  int rho_power = 0;        // i with g(P, Q) = rho^i(P, Q)
  int generator_power = 1;  // g = (chosen generator)^generator_power
};

class ClassificationFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Finds g in {gen, gen^-1} and i with (g P, g Q) = rho^i (P, Q); the order
// of rho^i decides the case.
template <class Field, class Gen>
OrbitClassification classify_orbit(const EllipticCurve<Field>& e, const PairPoint<typename Field::Element>& pq,
                                   Gen&& gen, int gen_order) {
  for (int gp : {1, gen_order - 1}) {
    auto apply = [&](const typename Field::Element& v) {
      auto r = v;
      for (int k = 0; k < gp; ++k) r = gen(r);
      return r;
    };
    const PairPoint<typename Field::Element> image{map_point(pq.first, apply), map_point(pq.second, apply)};
    auto cur = pq;
    for (int i = 0; i < 6; ++i) {
      if (cur == image) {
        const int order = 6 / std::gcd(i, 6);
        const OrbitCase kind = order == 1   ? OrbitCase::rational
                               : order == 2 ? OrbitCase::quadratic
                               : order == 3 ? OrbitCase::cubic
                                            : OrbitCase::sextic;
        return {kind, i, gp};
      }
      cur = rho(e, cur);
    }
    if (gen_order <= 2) break;
  }
  throw ClassificationFailure("no generator power maps (P, Q) to a rho-image");
}

struct PipelineCertificates {
  bool cubic_irreducible = false;
  bool disc_square = false;
  bool on_curve = false;
  bool trace_zero = false;
  bool infinite_order_heuristic = false;
  bool rho_order_six = false;
  bool half_turn_negates = false;    // rho^3 P = -P
  bool alternate_sum_zero = false;   // P + rho^2 P + rho^4 P = O
  bool orbit_distinct = false;
  bool all() const;
};

struct SexticConstruction {
  CurveModel curve;
  S6Point input;
  UniPoly intersection;            // T g/c - U (x - T)^2
  std::vector<BigInt> integer_cubic;  // primitive integer form, lowest degree first
  UniPoly cubic;                   // monic defining polynomial of K3
  Rational scale;                  // x = alpha / scale
  CyclicCubicField k3;
  ConductorEstimate conductor;
  BigInt delta;
  Rational slope;                  // y = slope * (x - T) * sqrt(delta)
  SexticField k6;
  Point<SexticElement> P;
  std::array<Point<SexticElement>, 6> orbit;
  Point<SexticElement> Q;          // partner with (P, Q) mapping to the input point
  PipelineCertificates certificates;
  InfiniteOrderCertificate infinite_order;
  OrbitClassification orbit_case;
};

enum class DegeneracyKind { not_on_surface, chart_boundary, degenerate_rational, degenerate_cubic };

std::string to_string(DegeneracyKind k);

struct CubicCaseData {
  CyclicCubicField k3;
  Point<CubicElement> P;
  Point<CubicElement> Q;
  OrbitClassification orbit_case;
};

struct Degenerate {
  DegeneracyKind kind;
  std::string detail;
  Rational residual;                    // for not_on_surface
  std::vector<Rational> rational_roots;  // for degenerate_rational
  std::optional<OrbitCase> orbit_case;
  std::optional<CubicCaseData> cubic_case;  // for degenerate_cubic
};

using PipelineResult = std::variant<SexticConstruction, Degenerate>;

// From a point on S6(E) to the cyclic sextic field over which E gains the
// corresponding point, with certificates.
PipelineResult point_to_sextic_field(const CurveModel& e, const S6Point& p);

// Recomputes the classification stored in a construction.
OrbitClassification orbit_classifier(const SexticConstruction& c);

// A point on S6(E^delta), where E^delta is c*y^2 = delta*g(x), goes to
// (U/delta, D, T) on S6(E). Raises std::logic_error if the image is off the
// surface and std::invalid_argument if the input is.
S6Point twist_transport(const CurveModel& e, const Rational& delta, const S6Point& p);
S6Point twist_transport_inverse(const CurveModel& e, const Rational& delta, const S6Point& p);

// S3(E): discriminant of x^3 + A x + B - (t x + u)^2 in x.
MultiPoly s3_rhs_poly();
Rational s3_rhs(const Rational& A, const Rational& B, const Rational& t, const Rational& u);

// (t, u, d) -> (U, D, T) = (-u t, -d u / t, -u / t).
S6Point s3_cover(const Rational& A, const Rational& B, const Rational& t, const Rational& u, const Rational& d);

struct CoverIdentity {
  bool holds = false;
  MultiPoly lhs;       // T D^2 - rhs after substitution
  MultiPoly quotient;  // lhs / (d^2 - s3 rhs)
};
CoverIdentity s3_cover_identity();

// S6 point attached to the line through rational points P and -Q.
S6Point s6_point_from_pair(const CurveModel& e, const Point<Rational>& p, const Point<Rational>& q);

// Coordinates after x' = c*x + c*a2/3, y' = c^2*y, which turn
// c*y^2 = g(x) into y'^2 = x'^3 + A x' + B.
struct ShortWeierstrassForm {
  Rational A;
  Rational B;
};
ShortWeierstrassForm short_weierstrass(const CurveModel& e);
// D keeps its sign (recomputed exactly on the new model).
S6Point to_short_weierstrass(const CurveModel& e, const S6Point& p);

}  // namespace sextic
