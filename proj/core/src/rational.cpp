#include "sextic/rational.hpp"

#include <functional>
#include <ostream>
#include <stdexcept>

namespace sextic {

namespace {

bool valid_integer_text(std::string_view s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i) {
    if (s[i] < '0' || s[i] > '9') return false;
  }
  return true;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

}  // namespace

BigInt bigint_parse(std::string_view text) {
  text = trim(text);
  if (!valid_integer_text(text)) {
    throw std::invalid_argument("not an integer: '" + std::string(text) + "'");
  }
  if (text[0] == '+') text.remove_prefix(1);
  return BigInt(std::string(text), 10);
}

Rational::Rational(const BigInt& num, const BigInt& den) : q_(num, den) {
  if (den == 0) throw std::domain_error("rational with zero denominator");
  q_.canonicalize();
}

Rational::Rational(const mpq_class& q) : q_(q) {
  if (q_.get_den() == 0) throw std::domain_error("rational with zero denominator");
  q_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
  text = trim(text);
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(bigint_parse(text));
  const BigInt n = bigint_parse(text.substr(0, slash));
  const BigInt d = bigint_parse(text.substr(slash + 1));
  if (d == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
  return Rational(n, d);
}

Rational Rational::abs() const { return Rational(mpq_class(::abs(q_))); }

Rational Rational::inverse() const {
  if (is_zero()) throw std::domain_error("inverse of zero");
  mpq_class r;
  mpq_inv(r.get_mpq_t(), q_.get_mpq_t());
  return Rational(r);
}

std::size_t Rational::height_bits() const {
  const std::size_t a = mpz_sizeinbase(q_.get_num_mpz_t(), 2);
  const std::size_t b = mpz_sizeinbase(q_.get_den_mpz_t(), 2);
  return is_zero() ? 0 : std::max(a, b);
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw std::domain_error("division by zero");
  q_ /= o.q_;
  return *this;
}

std::ostream& operator<<(std::ostream& os, const Rational& q) { return os << q.str(); }

Rational pow(const Rational& base, unsigned exponent) {
  mpz_class n, d;
  mpz_pow_ui(n.get_mpz_t(), base.raw().get_num_mpz_t(), exponent);
  mpz_pow_ui(d.get_mpz_t(), base.raw().get_den_mpz_t(), exponent);
  return Rational(n, d);
}

bool is_square(const Rational& q) {
  if (q.sign() < 0) return false;
  return mpz_perfect_square_p(q.raw().get_num_mpz_t()) != 0 &&
         mpz_perfect_square_p(q.raw().get_den_mpz_t()) != 0;
}

std::optional<Rational> exact_sqrt(const Rational& q) {
  if (!is_square(q)) return std::nullopt;
  mpz_class n, d;
  mpz_sqrt(n.get_mpz_t(), q.raw().get_num_mpz_t());
  mpz_sqrt(d.get_mpz_t(), q.raw().get_den_mpz_t());
  return Rational(n, d);
}

BigInt floor(const Rational& q) {
  mpz_class r;
  mpz_fdiv_q(r.get_mpz_t(), q.raw().get_num_mpz_t(), q.raw().get_den_mpz_t());
  return r;
}

std::size_t RationalHash::operator()(const Rational& q) const {
  return std::hash<std::string>{}(q.str());
}

}  // namespace sextic
