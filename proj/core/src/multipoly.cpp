#include "sextic/multipoly.hpp"

#include <ostream>
#include <sstream>
#include <stdexcept>

namespace sextic {

namespace {

constexpr std::array<std::string_view, kVarCount> kNames = {
    "A", "B", "T", "U", "D", "t", "u", "d", "X", "Y", "a", "b", "c", "m", "n", "s", "x", "y"};

std::size_t idx(Var v) { return static_cast<std::size_t>(v); }

Exponents zero_exponents() {
  Exponents e{};
  e.fill(0);
  return e;
}

}  // namespace

std::string_view var_name(Var v) { return kNames[idx(v)]; }

MultiPoly::MultiPoly(const Rational& c) {
  if (!c.is_zero()) terms_.emplace(zero_exponents(), c);
}

MultiPoly MultiPoly::var(Var v, int power) {
  MultiPoly p;
  Exponents e = zero_exponents();
  e[idx(v)] = static_cast<std::int16_t>(power);
  p.terms_.emplace(e, Rational(1));
  return p;
}

MultiPoly MultiPoly::monomial(const Rational& c,
                              std::initializer_list<std::pair<Var, int>> powers) {
  MultiPoly p;
  if (c.is_zero()) return p;
  Exponents e = zero_exponents();
  for (const auto& [v, k] : powers) e[idx(v)] = static_cast<std::int16_t>(e[idx(v)] + k);
  p.terms_.emplace(e, c);
  return p;
}

MultiPoly MultiPoly::from_unipoly(const UniPoly& q, Var v) {
  MultiPoly p;
  for (std::size_t i = 0; i < q.coefficients().size(); ++i) {
    const Rational& c = q.coefficients()[i];
    if (c.is_zero()) continue;
    Exponents e = zero_exponents();
    e[idx(v)] = static_cast<std::int16_t>(i);
    p.terms_.emplace(e, c);
  }
  return p;
}

void MultiPoly::add_term(const Exponents& e, const Rational& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

bool MultiPoly::uses(Var v) const {
  for (const auto& [e, c] : terms_) {
    if (e[idx(v)] != 0) return true;
  }
  return false;
}

int MultiPoly::degree_in(Var v) const {
  int d = 0;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    if (first || e[idx(v)] > d) d = e[idx(v)];
    first = false;
  }
  return d;
}

int MultiPoly::min_degree_in(Var v) const {
  int d = 0;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    if (first || e[idx(v)] < d) d = e[idx(v)];
    first = false;
  }
  return d;
}

MultiPoly MultiPoly::coefficient_of(Var v, int k) const {
  MultiPoly r;
  for (const auto& [e, c] : terms_) {
    if (e[idx(v)] != k) continue;
    Exponents f = e;
    f[idx(v)] = 0;
    r.add_term(f, c);
  }
  return r;
}

MultiPoly MultiPoly::substitute(Var v, const MultiPoly& value) const {
  // Group by power of v so each power of value is formed once.
  std::map<int, MultiPoly> by_power;
  for (const auto& [e, c] : terms_) {
    Exponents f = e;
    const int k = f[idx(v)];
    f[idx(v)] = 0;
    by_power[k].add_term(f, c);
  }
  MultiPoly result;
  for (const auto& [k, rest] : by_power) {
    if (k == 0) {
      result += rest;
      continue;
    }
    MultiPoly factor;
    if (k > 0) {
      factor = pow(value, static_cast<unsigned>(k));
    } else {
      if (value.terms_.size() != 1) {
        throw std::domain_error("substitute: negative power of a non-monomial value");
      }
      const auto& [ve, vc] = *value.terms_.begin();
      Exponents inv = ve;
      for (auto& x : inv) x = static_cast<std::int16_t>(-x * -k);
      factor.terms_.emplace(inv, pow(vc.inverse(), static_cast<unsigned>(-k)));
    }
    result += rest * factor;
  }
  return result;
}

MultiPoly MultiPoly::reduce_square(Var v, const MultiPoly& value) const {
  std::map<int, MultiPoly> by_power;
  for (const auto& [e, c] : terms_) {
    Exponents f = e;
    const int k = f[idx(v)];
    if (k < 0) throw std::domain_error("reduce_square: negative power");
    f[idx(v)] = static_cast<std::int16_t>(k % 2);
    by_power[k / 2].add_term(f, c);
  }
  MultiPoly result;
  for (const auto& [k, rest] : by_power) {
    result += rest * pow(value, static_cast<unsigned>(k));
  }
  return result;
}

Rational MultiPoly::evaluate(std::initializer_list<std::pair<Var, Rational>> bindings) const {
  return evaluate(std::map<Var, Rational>(bindings.begin(), bindings.end()));
}

Rational MultiPoly::evaluate(const std::map<Var, Rational>& bindings) const {
  const MultiPoly r = bind(bindings);
  if (r.is_zero()) return Rational(0);
  if (r.terms_.size() != 1 || r.terms_.begin()->first != zero_exponents()) {
    throw std::invalid_argument("evaluate: unbound variables remain");
  }
  return r.terms_.begin()->second;
}

MultiPoly MultiPoly::bind(const std::map<Var, Rational>& bindings) const {
  MultiPoly r;
  for (const auto& [e, c] : terms_) {
    Exponents f = e;
    Rational coef = c;
    for (const auto& [v, val] : bindings) {
      const int k = f[idx(v)];
      if (k == 0) continue;
      coef *= k > 0 ? pow(val, static_cast<unsigned>(k)) : pow(val.inverse(), static_cast<unsigned>(-k));
      f[idx(v)] = 0;
    }
    r.add_term(f, coef);
  }
  return r;
}

UniPoly MultiPoly::to_unipoly(Var v) const {
  std::vector<Rational> coeffs;
  for (const auto& [e, c] : terms_) {
    for (std::size_t i = 0; i < kVarCount; ++i) {
      if (i != idx(v) && e[i] != 0) {
        throw std::invalid_argument("to_unipoly: polynomial uses " + std::string(kNames[i]));
      }
    }
    const int k = e[idx(v)];
    if (k < 0) throw std::invalid_argument("to_unipoly: negative exponent");
    if (coeffs.size() <= static_cast<std::size_t>(k)) coeffs.resize(static_cast<std::size_t>(k) + 1);
    coeffs[static_cast<std::size_t>(k)] += c;
  }
  return UniPoly(std::move(coeffs));
}

MultiPoly MultiPoly::shifted(const Exponents& shift) const {
  MultiPoly r;
  for (const auto& [e, c] : terms_) {
    Exponents f = e;
    for (std::size_t i = 0; i < kVarCount; ++i) f[i] = static_cast<std::int16_t>(f[i] + shift[i]);
    r.terms_.emplace(f, c);
  }
  return r;
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

MultiPoly& MultiPoly::operator*=(const MultiPoly& o) {
  *this = *this * o;
  return *this;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
  MultiPoly r;
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      Exponents e;
      for (std::size_t i = 0; i < kVarCount; ++i) e[i] = static_cast<std::int16_t>(ea[i] + eb[i]);
      r.add_term(e, ca * cb);
    }
  }
  return r;
}

MultiPoly operator-(const MultiPoly& a) {
  MultiPoly r;
  for (const auto& [e, c] : a.terms_) r.terms_.emplace(e, -c);
  return r;
}

std::string MultiPoly::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  // Highest monomials first reads more naturally.
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    const bool neg = c.sign() < 0;
    const Rational mag = c.abs();
    if (first) {
      if (neg) os << '-';
    } else {
      os << (neg ? " - " : " + ");
    }
    first = false;
    bool any_var = false;
    std::ostringstream mono;
    for (std::size_t i = 0; i < kVarCount; ++i) {
      if (e[i] == 0) continue;
      if (any_var) mono << '*';
      mono << kNames[i];
      if (e[i] != 1) mono << '^' << e[i];
      any_var = true;
    }
    if (!any_var) {
      os << mag;
    } else if (mag.is_one()) {
      os << mono.str();
    } else {
      os << mag << '*' << mono.str();
    }
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const MultiPoly& p) { return os << p.str(); }

MultiPoly pow(const MultiPoly& base, unsigned exponent) {
  MultiPoly result(Rational(1));
  MultiPoly b = base;
  while (exponent > 0) {
    if (exponent & 1U) result = result * b;
    exponent >>= 1U;
    if (exponent > 0) b = b * b;
  }
  return result;
}

bool multipoly_equal(const MultiPoly& p, const MultiPoly& q) { return (p - q).is_zero(); }

}  // namespace sextic
