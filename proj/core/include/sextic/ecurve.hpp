#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>

#include "sextic/numfield.hpp"
#include "sextic/rational.hpp"
#include "sextic/unipoly.hpp"

namespace sextic {

// c*y^2 = x^3 + a2*x^2 + a1*x + a0.
struct CurveModel {
  Rational c{1};
  Rational a2;
  Rational a1;
  Rational a0;

  static CurveModel weierstrass(const Rational& A, const Rational& B);
  // Validating constructor.
  static CurveModel make(const Rational& c, const Rational& a2, const Rational& a1, const Rational& a0);

  UniPoly cubic() const;
  Rational discriminant() const;
  bool is_weierstrass() const { return c.is_one() && a2.is_zero(); }
  bool is_nonsingular() const;
  // Throws std::invalid_argument when c == 0 or the cubic has a repeated root.
  void validate() const;
  // Quadratic twist c*y^2 = delta*g(x), stored as coefficient c/delta.
  CurveModel twist(const Rational& delta) const;
  // c*y^2 - g(x).
  Rational residual(const Rational& x, const Rational& y) const;

  std::string str() const;
  friend bool operator==(const CurveModel&, const CurveModel&) = default;
};

template <class E>
class Point {
 public:
  Point() = default;
  Point(E x, E y) : xy_(std::in_place, std::move(x), std::move(y)) {}
  static Point infinity() { return Point(); }

  bool is_infinity() const { return !xy_.has_value(); }
  const E& x() const { return xy_->first; }
  const E& y() const { return xy_->second; }

  friend bool operator==(const Point& p, const Point& q) { return p.xy_ == q.xy_; }

 private:
  std::optional<std::pair<E, E>> xy_;
};

template <class E>
struct PairPoint {
  Point<E> first;
  Point<E> second;
  friend bool operator==(const PairPoint&, const PairPoint&) = default;
};

// Chord-tangent group law on a CurveModel with coefficients embedded into
// Field (RationalField, CyclicCubicField or SexticField).
template <class Field>
class EllipticCurve {
 public:
  using Element = typename Field::Element;
  using P = Point<Element>;

  EllipticCurve(const CurveModel& model, Field field)
      : model_(model),
        field_(std::move(field)),
        c_(field_.embed(model.c)),
        a2_(field_.embed(model.a2)),
        a1_(field_.embed(model.a1)),
        a0_(field_.embed(model.a0)) {
    model_.validate();
  }

  const CurveModel& model() const { return model_; }
  const Field& field() const { return field_; }

  Element rhs(const Element& x) const { return ((x + a2_) * x + a1_) * x + a0_; }

  bool contains(const P& p) const {
    if (p.is_infinity()) return true;
    return c_ * p.y() * p.y() == rhs(p.x());
  }

  P point(const Rational& x, const Rational& y) const { return P(field_.embed(x), field_.embed(y)); }

  P neg(const P& p) const {
    if (p.is_infinity()) return p;
    return P(p.x(), -p.y());
  }

  P add(const P& p, const P& q) const {
    if (p.is_infinity()) return q;
    if (q.is_infinity()) return p;
    Element lambda;
    if (p.x() == q.x()) {
      if (p.y() != q.y() || p.y().is_zero()) return P::infinity();
      const Element& x = p.x();
      const Element num = field_.embed(3) * x * x + field_.embed(2) * a2_ * x + a1_;
      lambda = num / (field_.embed(2) * c_ * p.y());
    } else {
      lambda = (q.y() - p.y()) / (q.x() - p.x());
    }
    Element x3 = c_ * lambda * lambda - a2_ - p.x() - q.x();
    Element y3 = -(p.y() + lambda * (x3 - p.x()));
    return P(std::move(x3), std::move(y3));
  }

  P dbl(const P& p) const { return add(p, p); }

  P sub(const P& p, const P& q) const { return add(p, neg(q)); }

  P mul(long k, const P& p) const {
    if (k < 0) return mul(-k, neg(p));
    P result = P::infinity();
    P base = p;
    while (k > 0) {
      if (k & 1L) result = add(result, base);
      k >>= 1;
      if (k > 0) base = dbl(base);
    }
    return result;
  }

 private:
  CurveModel model_;
  Field field_;
  Element c_, a2_, a1_, a0_;
};

// Apply a field map coordinatewise.
template <class E, class Fn>
Point<E> map_point(const Point<E>& p, Fn&& fn) {
  if (p.is_infinity()) return p;
  return Point<E>(fn(p.x()), fn(p.y()));
}

// rho(P, Q) = (Q, Q - P).
template <class Field>
PairPoint<typename Field::Element> rho(const EllipticCurve<Field>& e,
                                       const PairPoint<typename Field::Element>& pq) {
  return {pq.second, e.sub(pq.second, pq.first)};
}

template <class Field>
PairPoint<typename Field::Element> rho_power(const EllipticCurve<Field>& e,
                                             PairPoint<typename Field::Element> pq, int k) {
  k = ((k % 6) + 6) % 6;
  for (int i = 0; i < k; ++i) pq = rho(e, pq);
  return pq;
}

enum class StabilizerClass { free, full, order3, order2 };

std::string to_string(StabilizerClass s);

// Smallest i in {1,2,3} with rho^i fixing the pair decides the class.
template <class Field>
StabilizerClass stabilizer_class(const EllipticCurve<Field>& e, const PairPoint<typename Field::Element>& pq) {
  auto cur = pq;
  for (int i = 1; i <= 3; ++i) {
    cur = rho(e, cur);
    if (cur == pq) {
      return i == 1 ? StabilizerClass::full : (i == 2 ? StabilizerClass::order3 : StabilizerClass::order2);
    }
  }
  return StabilizerClass::free;
}

// Sum of g^k(P) for k = 0..order-1.
template <class Field, class Fn>
Point<typename Field::Element> trace_under(const EllipticCurve<Field>& e, const Point<typename Field::Element>& p,
                                           Fn&& g, int order) {
  auto sum = Point<typename Field::Element>::infinity();
  auto cur = p;
  for (int k = 0; k < order; ++k) {
    sum = e.add(sum, cur);
    cur = map_point(cur, g);
  }
  return sum;
}

struct InfiniteOrderCertificate {
  bool result = false;
  int torsion_bound = 36;
  // First k <= torsion_bound with kP = O, or 0 when none.
  int vanishing_multiple = 0;
  std::size_t height_p = 0;
  std::size_t height_4p = 0;
  bool heuristic = true;
};

inline constexpr int kTorsionCheckBound = 36;

// kP != O for 1 <= k <= 36 and the naive x-height of 4P exceeds that of P.
template <class Field>
InfiniteOrderCertificate is_probably_infinite_order(const EllipticCurve<Field>& e,
                                                    const Point<typename Field::Element>& p) {
  InfiniteOrderCertificate cert;
  cert.torsion_bound = kTorsionCheckBound;
  if (p.is_infinity()) {
    cert.vanishing_multiple = 1;
    return cert;
  }
  auto q = p;
  for (int k = 1; k <= kTorsionCheckBound; ++k) {
    if (q.is_infinity()) {
      cert.vanishing_multiple = k;
      return cert;
    }
    q = e.add(q, p);
  }
  const auto p4 = e.dbl(e.dbl(p));
  cert.height_p = height_bits(p.x());
  cert.height_4p = height_bits(p4.x());
  cert.result = cert.height_4p > cert.height_p;
  return cert;
}

}  // namespace sextic
