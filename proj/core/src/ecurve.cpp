#include "sextic/ecurve.hpp"

#include <sstream>

namespace sextic {

CurveModel CurveModel::weierstrass(const Rational& A, const Rational& B) {
  return make(Rational(1), Rational(0), A, B);
}

CurveModel CurveModel::make(const Rational& c, const Rational& a2, const Rational& a1, const Rational& a0) {
  CurveModel m{c, a2, a1, a0};
  m.validate();
  return m;
}

UniPoly CurveModel::cubic() const { return UniPoly({a0, a1, a2, Rational(1)}); }

Rational CurveModel::discriminant() const { return cubic_discriminant(Rational(1), a2, a1, a0); }

bool CurveModel::is_nonsingular() const { return !c.is_zero() && !discriminant().is_zero(); }

void CurveModel::validate() const {
  if (c.is_zero()) throw std::invalid_argument("curve model with c = 0");
  if (discriminant().is_zero()) throw std::invalid_argument("singular curve " + str());
}

CurveModel CurveModel::twist(const Rational& delta) const {
  if (delta.is_zero()) throw std::invalid_argument("twist by zero");
  return CurveModel{c / delta, a2, a1, a0};
}

Rational CurveModel::residual(const Rational& x, const Rational& y) const {
  return c * y * y - cubic()(x);
}

std::string CurveModel::str() const {
  std::ostringstream os;
  if (!c.is_one()) os << c << "*";
  os << "y^2 = " << cubic().str();
  return os.str();
}

std::string to_string(StabilizerClass s) {
  switch (s) {
    case StabilizerClass::free: return "free";
    case StabilizerClass::full: return "full";
    case StabilizerClass::order3: return "order3";
    case StabilizerClass::order2: return "order2";
  }
  return "unknown";
}

}  // namespace sextic
