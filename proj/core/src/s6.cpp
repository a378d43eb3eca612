#include "sextic/s6.hpp"

#include <stdexcept>

#include "sextic/factor.hpp"

namespace sextic {

namespace {

template <class R>
R delta_closed_form(const R& A, const R& B, const R& T, const R& U) {
  const R g = T * T * T + A * T + B;
  return R(4) * T * g * U * U * U -
         T * T * (R(27) * T * T * T * T + R(30) * A * T * T - A * A + R(36) * B * T) * U * U -
         R(6) * T * T * T * (R(4) * A * A * T - R(9) * B * T * T + R(3) * A * B) * U -
         (R(4) * A * A * A + R(27) * B * B) * T * T * T * T;
}

template <class R>
R s6_rhs_closed_form(const R& A, const R& B, const R& T, const R& U) {
  const R g = T * T * T + A * T + B;
  return R(4) * g * U * U * U - T * (R(27) * T * T * T * T + R(30) * A * T * T - A * A + R(36) * B * T) * U * U -
         R(6) * T * T * (R(4) * A * A * T - R(9) * B * T * T + R(3) * A * B) * U -
         (R(4) * A * A * A + R(27) * B * B) * T * T * T;
}

MultiPoly V(Var v) { return MultiPoly::var(v); }

}  // namespace

Rational delta_formula(const Rational& A, const Rational& B, const Rational& T, const Rational& U) {
  return delta_closed_form(A, B, T, U);
}

MultiPoly delta_formula_poly() { return delta_closed_form(V(Var::A), V(Var::B), V(Var::T), V(Var::U)); }

MultiPoly delta_oracle_poly() {
  const MultiPoly A = V(Var::A), B = V(Var::B), T = V(Var::T), U = V(Var::U);
  return cubic_discriminant<MultiPoly>(T, -U, T * (A + MultiPoly(2) * U), T * (B - T * U));
}

MultiPoly s6_weierstrass_rhs_poly() { return s6_rhs_closed_form(V(Var::A), V(Var::B), V(Var::T), V(Var::U)); }

Rational s6_weierstrass_rhs(const Rational& A, const Rational& B, const Rational& T, const Rational& U) {
  return s6_rhs_closed_form(A, B, T, U);
}

UniPoly intersection_cubic(const CurveModel& e, const Rational& T, const Rational& U) {
  const Rational k = T / e.c;
  return UniPoly({k * e.a0 - U * T * T, k * e.a1 + Rational(2) * U * T, k * e.a2 - U, k});
}

UniPoly sextic_poly(const Rational& A, const Rational& B, const Rational& T, const Rational& U) {
  const Rational T2 = T * T, T3 = T2 * T;
  const Rational g = T3 + A * T + B;
  const Rational c6 = T3;
  // The U^2 inside this coefficient enters with a plus sign; Res_x of the
  // cubic and y^2 - g(x) fixes it.
  const Rational c4 = -U * (Rational(3) * T2 * T2 - Rational(2) * (A + Rational(3) * U) * T2 + U * U);
  const Rational c2 = U * U *
                      (Rational(3) * T2 * T3 + Rational(2) * U * T3 - Rational(6) * B * T2 +
                       A * (A + Rational(2) * U) * T + Rational(2) * B * U);
  const Rational c0 = -g * g * U * U * U;
  return UniPoly({c0, 0, c2, 0, c4, 0, c6});
}

// --- surface ------------------------------------------------------------------

S6Surface::S6Surface(CurveModel e) : curve_(std::move(e)) { curve_.validate(); }

Rational S6Surface::rhs(const Rational& T, const Rational& U) const {
  if (T.is_zero()) throw std::invalid_argument("S6 chart boundary: T = 0");
  const auto& e = curve_;
  const Rational cu = e.c * U;
  const Rational disc =
      cubic_discriminant(T, T * e.a2 - cu, T * e.a1 + Rational(2) * cu * T, T * e.a0 - cu * T * T);
  return disc / T;
}

Rational S6Surface::residual(const S6Point& p) const { return p.T * p.D * p.D - rhs(p.T, p.U); }

std::optional<Rational> S6Surface::solve_D(const Rational& T, const Rational& U) const {
  return exact_sqrt(rhs(T, U) / T);
}

S6Surface s6_model(const CurveModel& e) { return S6Surface(e); }

std::string to_string(OrbitCase c) {
  switch (c) {
    case OrbitCase::rational: return "i";
    case OrbitCase::quadratic: return "ii";
    case OrbitCase::cubic: return "iii";
    case OrbitCase::sextic: return "iv";
  }
  return "?";
}

std::string to_string(DegeneracyKind k) {
  switch (k) {
    case DegeneracyKind::not_on_surface: return "NotOnSurface";
    case DegeneracyKind::chart_boundary: return "ChartBoundary";
    case DegeneracyKind::degenerate_rational: return "DegenerateRational";
    case DegeneracyKind::degenerate_cubic: return "DegenerateCubic";
  }
  return "?";
}

bool PipelineCertificates::all() const {
  return cubic_irreducible && disc_square && on_curve && trace_zero && infinite_order_heuristic && rho_order_six &&
         half_turn_negates && alternate_sum_zero && orbit_distinct;
}

// --- pipeline -------------------------------------------------------------------

PipelineResult point_to_sextic_field(const CurveModel& e, const S6Point& p) {
  e.validate();
  if (p.T.is_zero() || p.U.is_zero()) {
    return Degenerate{DegeneracyKind::chart_boundary, p.T.is_zero() ? "T = 0" : "U = 0", {}, {}, {}, {}};
  }
  const S6Surface surface(e);
  const Rational res = surface.residual(p);
  if (!res.is_zero()) {
    return Degenerate{DegeneracyKind::not_on_surface, "surface residual " + res.str(), res, {}, {}, {}};
  }

  const UniPoly h = intersection_cubic(e, p.T, p.U);
  const BigInt delta = squarefree_part(p.U * p.T);
  if (auto roots = rational_roots(h); !roots.empty()) {
    Degenerate d{DegeneracyKind::degenerate_rational, "intersection cubic has a rational root", {}, roots, {}, {}};
    d.orbit_case = delta == 1 ? OrbitCase::rational : OrbitCase::quadratic;
    return d;
  }

  // alpha = F3 * x is integral over Z with the monic polynomial below.
  const IntegerPoly ip = primitive_integer(h);
  const BigInt& F3 = ip.coeffs[3];
  const UniPoly f({Rational(BigInt(ip.coeffs[0] * F3 * F3)), Rational(BigInt(ip.coeffs[1] * F3)), Rational(ip.coeffs[2]),
                   Rational(1)});
  const CyclicCubicField k3(f);
  const Rational scale(F3);
  const CubicElement x = k3.generator() * scale.inverse();
  const CubicElement sx = k3.sigma(x);
  const auto slope_opt = exact_sqrt(p.U / (p.T * Rational(delta)));
  if (!slope_opt) throw std::logic_error("U/(T delta) is not a square");
  const Rational slope = *slope_opt;
  const CubicElement T3 = k3.embed(p.T);

  if (delta == 1) {
    const EllipticCurve<CyclicCubicField> ek(e, k3);
    const Point<CubicElement> P(x, (x - T3) * slope);
    const Point<CubicElement> P2(sx, (sx - T3) * slope);
    const Point<CubicElement> Q = ek.neg(P2);
    auto sigma = [&](const CubicElement& v) { return k3.sigma(v); };
    CubicCaseData data{k3, P, Q, classify_orbit(ek, {P, Q}, sigma, 3)};
    Degenerate d{DegeneracyKind::degenerate_cubic, "y lies in the cubic field (delta = 1)", {}, {}, {}, {}};
    d.orbit_case = data.orbit_case.kind;
    d.cubic_case = std::move(data);
    return d;
  }

  const SexticField k6(k3, delta);
  const EllipticCurve<SexticField> e6(e, k6);
  const CubicElement zero = k3.embed(0);
  const Point<SexticElement> P(k6.lift(x), k6.make(zero, (x - T3) * slope));
  const Point<SexticElement> P2(k6.lift(sx), k6.make(zero, (sx - T3) * slope));
  const Point<SexticElement> Q = e6.neg(P2);
  auto rho = [&](const SexticElement& v) { return k6.rho(v); };

  std::array<Point<SexticElement>, 6> orbit;
  orbit[0] = P;
  for (int k = 1; k < 6; ++k) orbit[k] = map_point(orbit[k - 1], rho);

  PipelineCertificates cert;
  cert.cubic_irreducible = true;
  cert.disc_square = is_square(k3.disc());
  cert.on_curve = e6.contains(P);
  cert.trace_zero = trace_under(e6, P, rho, 6).is_infinity();
  {
    const SexticElement a = k6.lift(k3.generator());
    const SexticElement r = k6.sqrt_delta();
    cert.rho_order_six = k6.rho_power(a, 6) == a && k6.rho_power(r, 6) == r && k6.rho_power(a, 2) != a &&
                         k6.rho_power(r, 3) != r;
  }
  cert.half_turn_negates = orbit[3] == e6.neg(P);
  cert.alternate_sum_zero = e6.add(e6.add(orbit[0], orbit[2]), orbit[4]).is_infinity();
  cert.orbit_distinct = true;
  for (int i = 0; i < 6; ++i) {
    for (int j = i + 1; j < 6; ++j) {
      if (orbit[i] == orbit[j]) cert.orbit_distinct = false;
    }
  }
  const InfiniteOrderCertificate inf = is_probably_infinite_order(e6, P);
  cert.infinite_order_heuristic = inf.result;
  const OrbitClassification oc = classify_orbit(e6, {P, Q}, rho, 6);

  return SexticConstruction{
      .curve = e,
      .input = p,
      .intersection = h,
      .integer_cubic = ip.coeffs,
      .cubic = f,
      .scale = scale,
      .k3 = k3,
      .conductor = cubic_conductor_heuristic(from_integers(ip.coeffs)),
      .delta = delta,
      .slope = slope,
      .k6 = k6,
      .P = P,
      .orbit = orbit,
      .Q = Q,
      .certificates = cert,
      .infinite_order = inf,
      .orbit_case = oc,
  };
}

OrbitClassification orbit_classifier(const SexticConstruction& c) {
  const EllipticCurve<SexticField> e6(c.curve, c.k6);
  auto rho = [&](const SexticElement& v) { return c.k6.rho(v); };
  return classify_orbit(e6, {c.P, c.Q}, rho, 6);
}

// --- twists and the S3 cover -----------------------------------------------------

S6Point twist_transport(const CurveModel& e, const Rational& delta, const S6Point& p) {
  if (!S6Surface(e.twist(delta)).contains(p)) {
    throw std::invalid_argument("twist_transport: point is not on the twisted surface");
  }
  S6Point out{p.U / delta, p.D, p.T};
  if (!S6Surface(e).contains(out)) throw std::logic_error("twist_transport: image is off the surface");
  return out;
}

S6Point twist_transport_inverse(const CurveModel& e, const Rational& delta, const S6Point& p) {
  if (!S6Surface(e).contains(p)) throw std::invalid_argument("twist_transport_inverse: point is not on the surface");
  S6Point out{p.U * delta, p.D, p.T};
  if (!S6Surface(e.twist(delta)).contains(out)) {
    throw std::logic_error("twist_transport_inverse: image is off the twisted surface");
  }
  return out;
}

MultiPoly s3_rhs_poly() {
  const MultiPoly A = V(Var::A), B = V(Var::B), t = V(Var::t), u = V(Var::u);
  return cubic_discriminant<MultiPoly>(MultiPoly(1), -(t * t), A - MultiPoly(2) * t * u, B - u * u);
}

Rational s3_rhs(const Rational& A, const Rational& B, const Rational& t, const Rational& u) {
  return cubic_discriminant(Rational(1), -(t * t), A - Rational(2) * t * u, B - u * u);
}

S6Point s3_cover(const Rational& A, const Rational& B, const Rational& t, const Rational& u, const Rational& d) {
  if (t.is_zero()) throw std::invalid_argument("s3_cover: t = 0");
  if (d * d != s3_rhs(A, B, t, u)) throw std::invalid_argument("s3_cover: point is not on S3");
  const Rational T = -u / t;
  if (T.is_zero()) throw std::invalid_argument("s3_cover: image on the chart boundary T = 0");
  S6Point out{-u * t, -d * u / t, T};
  if (!S6Surface(CurveModel::weierstrass(A, B)).contains(out)) {
    throw std::logic_error("s3_cover: image is off S6");
  }
  return out;
}

CoverIdentity s3_cover_identity() {
  const MultiPoly Tv = MultiPoly::monomial(-1, {{Var::u, 1}, {Var::t, -1}});
  const MultiPoly Uv = MultiPoly::monomial(-1, {{Var::u, 1}, {Var::t, 1}});
  const MultiPoly Dv = MultiPoly::monomial(-1, {{Var::d, 1}, {Var::u, 1}, {Var::t, -1}});
  const MultiPoly rhs = s6_weierstrass_rhs_poly().substitute(Var::T, Tv).substitute(Var::U, Uv);
  CoverIdentity out;
  out.lhs = Tv * Dv * Dv - rhs;
  out.quotient = MultiPoly::monomial(-1, {{Var::u, 3}, {Var::t, -3}});
  const MultiPoly divisor = MultiPoly::var(Var::d, 2) - s3_rhs_poly();
  out.holds = multipoly_equal(out.lhs, out.quotient * divisor);
  return out;
}

S6Point s6_point_from_pair(const CurveModel& e, const Point<Rational>& p, const Point<Rational>& q) {
  if (p.is_infinity() || q.is_infinity()) throw std::invalid_argument("s6_point_from_pair: point at infinity");
  if (p.x() == q.x()) throw std::invalid_argument("s6_point_from_pair: vertical line");
  const Rational t = (-q.y() - p.y()) / (q.x() - p.x());
  const Rational u = p.y() - t * p.x();
  if (t.is_zero() || u.is_zero()) throw std::invalid_argument("s6_point_from_pair: line meets the chart boundary");
  const Rational T = -u / t;
  const Rational U = -u * t;
  const auto D = S6Surface(e).solve_D(T, U);
  if (!D) throw std::logic_error("s6_point_from_pair: discriminant is not a square");
  return {U, *D, T};
}

ShortWeierstrassForm short_weierstrass(const CurveModel& e) {
  const Rational a = e.c * e.a2;
  const Rational b = e.c * e.c * e.a1;
  const Rational d = e.c * e.c * e.c * e.a0;
  return {b - a * a / Rational(3), d - a * b / Rational(3) + Rational(2) * a * a * a / Rational(27)};
}

S6Point to_short_weierstrass(const CurveModel& e, const S6Point& p) {
  if (p.T.is_zero()) throw std::invalid_argument("to_short_weierstrass: T = 0");
  const ShortWeierstrassForm w = short_weierstrass(e);
  const Rational T = e.c * p.T + e.c * e.a2 / Rational(3);
  if (T.is_zero()) throw std::invalid_argument("to_short_weierstrass: image has T = 0");
  const Rational U = e.c * e.c * p.U * T / p.T;
  auto D = S6Surface(CurveModel::weierstrass(w.A, w.B)).solve_D(T, U);
  if (!D) throw std::logic_error("to_short_weierstrass: image is off the surface");
  return {U, p.D.sign() < 0 ? -*D : *D, T};
}

}  // namespace sextic
