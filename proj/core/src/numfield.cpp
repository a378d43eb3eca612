#include "sextic/numfield.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "sextic/factor.hpp"

namespace sextic {

namespace detail {

struct CubicFieldData {
  UniPoly f;
  Rational f0, f1, f2;
  Rational disc, sqrt_disc;
  // alpha^3 and alpha^4 in the power basis.
  std::array<Rational, 3> alpha3, alpha4;
  // The same over the common denominator alpha_den.
  std::array<BigInt, 3> alpha3_num, alpha4_num;
  BigInt alpha_den{1};
  // sigma(alpha) and sigma(alpha)^2.
  std::array<Rational, 3> s1, s2;
};

struct SexticFieldData {
  CyclicCubicField cubic;
  BigInt delta;
  Rational delta_q;
};

}  // namespace detail

namespace {

using FieldPtr = std::shared_ptr<const detail::CubicFieldData>;

const FieldPtr& pick(const FieldPtr& a, const FieldPtr& b) { return a ? a : b; }

// v = n / d with integer n and a common denominator d.
struct Scaled {
  std::array<BigInt, 3> n;
  BigInt d{1};
};

Scaled scaled(const std::array<Rational, 3>& v) {
  Scaled s;
  for (const auto& q : v) {
    const mpz_class& den = q.raw().get_den();
    if (den != 1) mpz_lcm(s.d.get_mpz_t(), s.d.get_mpz_t(), den.get_mpz_t());
  }
  for (int i = 0; i < 3; ++i) {
    const mpq_class& q = v[i].raw();
    if (s.d == 1) {
      s.n[i] = q.get_num();
    } else {
      mpz_divexact(s.n[i].get_mpz_t(), s.d.get_mpz_t(), q.get_den_mpz_t());
      s.n[i] *= q.get_num();
    }
  }
  return s;
}

// Works on integer numerators so the only gcds are the three final
// canonicalizations.
std::array<Rational, 3> reduce_product(const detail::CubicFieldData& k, const std::array<Rational, 3>& x,
                                       const std::array<Rational, 3>& y) {
  const Scaled sx = scaled(x), sy = scaled(y);
  BigInt p[5];
  for (int i = 0; i < 3; ++i) {
    if (sgn(sx.n[i]) == 0) continue;
    for (int j = 0; j < 3; ++j) {
      if (sgn(sy.n[j]) == 0) continue;
      mpz_addmul(p[i + j].get_mpz_t(), sx.n[i].get_mpz_t(), sy.n[j].get_mpz_t());
    }
  }
  // alpha^3 = a3 / ad and alpha^4 = a4 / ad.
  std::array<BigInt, 3> r;
  for (int i = 0; i < 3; ++i) {
    r[i] = p[i] * k.alpha_den;
    if (sgn(p[3]) != 0) mpz_addmul(r[i].get_mpz_t(), p[3].get_mpz_t(), k.alpha3_num[i].get_mpz_t());
    if (sgn(p[4]) != 0) mpz_addmul(r[i].get_mpz_t(), p[4].get_mpz_t(), k.alpha4_num[i].get_mpz_t());
  }
  const BigInt den = BigInt(sx.d * sy.d) * k.alpha_den;
  return {Rational(r[0], den), Rational(r[1], den), Rational(r[2], den)};
}

std::array<Rational, 3> reduce_poly(const UniPoly& f, const UniPoly& p) {
  const UniPoly r = p % f;
  return {r.coeff(0), r.coeff(1), r.coeff(2)};
}

CubicElement horner(const UniPoly& p, const CubicElement& x, const FieldPtr& field) {
  CubicElement acc(field, Rational(0));
  for (auto it = p.coefficients().rbegin(); it != p.coefficients().rend(); ++it) {
    acc = acc * x + CubicElement(field, *it);
  }
  return acc;
}

ConductorEstimate conductor_from_integer_form(const std::vector<BigInt>& a) {
  // a = {a0, a1, a2, a3}, F(X, Y) = a3 X^3 + a2 X^2 Y + a1 X Y^2 + a0 Y^3.
  const Rational disc = cubic_discriminant(Rational(a[3]), Rational(a[2]), Rational(a[1]), Rational(a[0]));
  if (disc.is_zero()) throw std::invalid_argument("conductor of a cubic with repeated roots");
  const auto root = exact_sqrt(disc.abs());
  const BigInt to_factor = root ? root->num() : disc.num();

  ConductorEstimate out;
  for (const BigInt& p : prime_divisors(to_factor)) {
    // Only 3 and primes = 1 mod 3 can ramify in a cyclic cubic field.
    if (root && p != 3 && mpz_fdiv_ui(p.get_mpz_t(), 3) == 2) continue;
    if (p == 2 || p == 3) {
      out.ambiguous.push_back(p);
      continue;
    }
    auto mod = [&](const BigInt& v) {
      BigInt r;
      mpz_mod(r.get_mpz_t(), v.get_mpz_t(), p.get_mpz_t());
      return r;
    };
    std::vector<BigInt> shifted;
    if (mod(a[3]) != 0) {
      // Candidate triple root r = -a2 / (3 a3) mod p.
      BigInt inv;
      const BigInt three_a3 = mod(BigInt(3 * a[3]));
      mpz_invert(inv.get_mpz_t(), three_a3.get_mpz_t(), p.get_mpz_t());
      const BigInt r = mod(BigInt(-a[2] * inv));
      const bool cube = mod(BigInt(a[1] - 3 * a[3] * r * r)) == 0 &&
                        mod(BigInt(a[0] + a[3] * r * r * r)) == 0;
      if (!cube) continue;
      const UniPoly s = from_integers(a).shift(Rational(r));
      for (const auto& c : s.coefficients()) shifted.push_back(c.num());
    } else {
      const bool cube = mod(a[2]) == 0 && mod(a[1]) == 0;
      if (!cube) continue;
      // Triple root at infinity: look at the reversed form.
      shifted = {a[3], a[2], a[1], a[0]};
    }
    shifted.resize(4);
    const bool eisenstein = mod(shifted[3]) != 0 && mod(shifted[2]) == 0 && mod(shifted[1]) == 0 &&
                            mod(shifted[0]) == 0 && valuation(shifted[0], p) == 1;
    if (eisenstein) {
      out.determined *= p;
    } else {
      out.ambiguous.push_back(p);
    }
  }
  return out;
}

bool contains(const std::vector<BigInt>& v, const BigInt& p) {
  return std::find(v.begin(), v.end(), p) != v.end();
}

// A prime certified ramified for one field but certified unramified for the
// other proves the fields are distinct.
bool conductors_conflict(const ConductorEstimate& x, const ConductorEstimate& y) {
  for (const BigInt& p : prime_divisors(x.determined)) {
    if (mpz_divisible_p(y.determined.get_mpz_t(), p.get_mpz_t()) == 0 && !contains(y.ambiguous, p)) {
      return true;
    }
  }
  return false;
}

Rational det3(const std::array<std::array<Rational, 3>, 3>& m) {
  return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
         m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
         m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
}

}  // namespace

std::size_t height_bits(const Rational& q) { return q.height_bits(); }

// --- CubicElement ---------------------------------------------------------

CubicElement::CubicElement(std::shared_ptr<const detail::CubicFieldData> field, Rational c0,
                           Rational c1, Rational c2)
    : field_(std::move(field)), c_{std::move(c0), std::move(c1), std::move(c2)} {}

bool CubicElement::is_zero() const { return c_[0].is_zero() && c_[1].is_zero() && c_[2].is_zero(); }

CubicElement CubicElement::inverse() const {
  if (is_zero()) throw std::domain_error("inverse of zero in cubic field");
  if (is_rational()) return CubicElement(field_, c_[0].inverse());
  if (!field_) throw std::logic_error("cubic element without a field");
  // Solve M v = e0 for the matrix M of multiplication by this element, by
  // cofactors over the integers; much cheaper than a polynomial xgcd over Q.
  // With this element n / d, the columns of M are n, n alpha and n alpha^2,
  // the last two over ad and ad^2 where alpha^3 = a3 / ad.
  const Scaled sa = scaled(c_);
  const auto& n = sa.n;
  const BigInt& ad = field_->alpha_den;
  const auto& a3 = field_->alpha3_num;
  auto times_alpha = [&](const std::array<BigInt, 3>& v) {
    return std::array<BigInt, 3>{BigInt(v[2] * a3[0]), BigInt(v[0] * ad + v[2] * a3[1]),
                                 BigInt(v[1] * ad + v[2] * a3[2])};
  };
  const std::array<BigInt, 3> b = times_alpha(n);
  const std::array<BigInt, 3> c = times_alpha(b);
  const BigInt x0 = b[1] * c[2] - c[1] * b[2];
  const BigInt x1 = c[1] * n[2] - n[1] * c[2];
  const BigInt x2 = n[1] * b[2] - b[1] * n[2];
  const BigInt det = n[0] * x0 + b[0] * x1 + c[0] * x2;
  if (sgn(det) == 0) throw std::domain_error("element not invertible: modulus is reducible");
  return CubicElement(field_, Rational(BigInt(sa.d * x0), det), Rational(BigInt(sa.d * ad * x1), det),
                      Rational(BigInt(sa.d * ad * ad * x2), det));
}

CubicElement& CubicElement::operator+=(const CubicElement& o) {
  field_ = pick(field_, o.field_);
  for (int i = 0; i < 3; ++i) c_[i] += o.c_[i];
  return *this;
}

CubicElement& CubicElement::operator-=(const CubicElement& o) {
  field_ = pick(field_, o.field_);
  for (int i = 0; i < 3; ++i) c_[i] -= o.c_[i];
  return *this;
}

CubicElement& CubicElement::operator*=(const CubicElement& o) {
  field_ = pick(field_, o.field_);
  if (o.is_rational()) return *this *= o.c_[0];
  if (is_rational()) {
    const Rational k = c_[0];
    c_ = o.c_;
    return *this *= k;
  }
  if (!field_) throw std::logic_error("cubic element without a field");
  c_ = reduce_product(*field_, c_, o.c_);
  return *this;
}

CubicElement& CubicElement::operator*=(const Rational& k) {
  for (auto& v : c_) v *= k;
  return *this;
}

CubicElement operator-(const CubicElement& a) {
  return CubicElement(a.field_, -a.c_[0], -a.c_[1], -a.c_[2]);
}

std::string CubicElement::str(char var) const {
  std::ostringstream os;
  os << '(' << c_[0] << ") + (" << c_[1] << ")*" << var << " + (" << c_[2] << ")*" << var << "^2";
  return os.str();
}

std::size_t height_bits(const CubicElement& e) {
  std::size_t h = 0;
  for (const auto& c : e.coefficients()) h = std::max(h, c.height_bits());
  return h;
}

CubicElement cubic_invert(const CubicElement& e) { return e.inverse(); }

// --- CyclicCubicField -----------------------------------------------------

CyclicCubicField::CyclicCubicField(const UniPoly& f) {
  if (f.degree() != 3 || !f.leading().is_one()) {
    throw std::invalid_argument("cyclic cubic field needs a monic cubic, got " + f.str());
  }
  if (has_rational_root(f)) throw std::invalid_argument("reducible cubic " + f.str());
  auto d = std::make_shared<detail::CubicFieldData>();
  d->f = f;
  d->f0 = f.coeff(0);
  d->f1 = f.coeff(1);
  d->f2 = f.coeff(2);
  d->disc = cubic_discriminant(f);
  const auto root = exact_sqrt(d->disc);
  if (!root || root->is_zero()) {
    throw std::invalid_argument("cubic " + f.str() + " has non-square discriminant " + d->disc.str());
  }
  d->sqrt_disc = *root;
  d->alpha3 = {-d->f0, -d->f1, -d->f2};
  d->alpha4 = {d->f0 * d->f2, d->f1 * d->f2 - d->f0, d->f2 * d->f2 - d->f1};
  {
    std::array<Rational, 6> all;
    for (int i = 0; i < 3; ++i) {
      all[i] = d->alpha3[i];
      all[i + 3] = d->alpha4[i];
    }
    for (const auto& q : all) {
      mpz_lcm(d->alpha_den.get_mpz_t(), d->alpha_den.get_mpz_t(), q.raw().get_den_mpz_t());
    }
    for (int i = 0; i < 3; ++i) {
      d->alpha3_num[i] = d->alpha3[i].num() * BigInt(d->alpha_den / d->alpha3[i].den());
      d->alpha4_num[i] = d->alpha4[i].num() * BigInt(d->alpha_den / d->alpha4[i].den());
    }
  }

  FieldPtr ptr = d;
  const CubicElement alpha(ptr, 0, 1, 0);
  const CubicElement fprime(ptr, d->f1, 2 * d->f2, 3);
  CubicElement s = (CubicElement(ptr, -d->f2) - alpha + CubicElement(ptr, d->sqrt_disc) * fprime.inverse()) *
                   Rational(1, 2);
  const CubicElement s2 = s * s;
  d->s1 = s.coefficients();
  d->s2 = s2.coefficients();
  data_ = d;

  // sigma must send alpha to another root and have order 3.
  if (!horner(f, s, data_).is_zero() || s == alpha) {
    throw std::logic_error("galois generator construction failed for " + f.str());
  }
  if (sigma_power(alpha, 3) != alpha) throw std::logic_error("galois generator does not have order 3");
}

const UniPoly& CyclicCubicField::polynomial() const { return data_->f; }
const Rational& CyclicCubicField::disc() const { return data_->disc; }
const Rational& CyclicCubicField::sqrt_disc() const { return data_->sqrt_disc; }

CubicElement CyclicCubicField::embed(const Rational& q) const { return CubicElement(data_, q); }

CubicElement CyclicCubicField::element(const Rational& c0, const Rational& c1, const Rational& c2) const {
  return CubicElement(data_, c0, c1, c2);
}

CubicElement CyclicCubicField::element(const UniPoly& p) const {
  const auto c = reduce_poly(data_->f, p);
  return CubicElement(data_, c[0], c[1], c[2]);
}

CubicElement CyclicCubicField::generator() const { return CubicElement(data_, 0, 1, 0); }

CubicElement CyclicCubicField::sigma(const CubicElement& e) const {
  std::array<Rational, 3> r{e[0], 0, 0};
  for (int i = 0; i < 3; ++i) r[i] += e[1] * data_->s1[i] + e[2] * data_->s2[i];
  return CubicElement(data_, r[0], r[1], r[2]);
}

CubicElement CyclicCubicField::sigma_power(const CubicElement& e, int k) const {
  k = ((k % 3) + 3) % 3;
  CubicElement r = e;
  for (int i = 0; i < k; ++i) r = sigma(r);
  return r;
}

Rational CyclicCubicField::trace(const CubicElement& e) const {
  const CubicElement t = e + sigma(e) + sigma_power(e, 2);
  return t[0];
}

Rational CyclicCubicField::norm(const CubicElement& e) const {
  const CubicElement t = e * sigma(e) * sigma_power(e, 2);
  return t[0];
}

UniPoly CyclicCubicField::charpoly(const CubicElement& e) const {
  const CubicElement e1 = sigma(e);
  const CubicElement e2 = sigma(e1);
  const CubicElement s2 = e * e1 + e1 * e2 + e2 * e;
  return UniPoly({-norm(e), s2[0], -trace(e), Rational(1)});
}

CubicElement galois_generator(const CyclicCubicField& k) { return k.sigma(k.generator()); }

// --- SexticElement / SexticField ------------------------------------------

SexticElement::SexticElement(std::shared_ptr<const detail::SexticFieldData> field, CubicElement a,
                             CubicElement b)
    : field_(std::move(field)), a_(std::move(a)), b_(std::move(b)) {}

CubicElement SexticElement::norm_to_cubic() const {
  if (!field_) throw std::logic_error("sextic element without a field");
  return a_ * a_ - b_ * b_ * field_->delta_q;
}

SexticElement SexticElement::inverse() const {
  if (is_zero()) throw std::domain_error("inverse of zero in sextic field");
  const CubicElement n = norm_to_cubic().inverse();
  return SexticElement(field_, a_ * n, -(b_ * n));
}

SexticElement& SexticElement::operator+=(const SexticElement& o) {
  if (!field_) field_ = o.field_;
  a_ += o.a_;
  b_ += o.b_;
  return *this;
}

SexticElement& SexticElement::operator-=(const SexticElement& o) {
  if (!field_) field_ = o.field_;
  a_ -= o.a_;
  b_ -= o.b_;
  return *this;
}

SexticElement& SexticElement::operator*=(const SexticElement& o) {
  if (!field_) field_ = o.field_;
  if (!field_) throw std::logic_error("sextic element without a field");
  CubicElement na = a_ * o.a_;
  if (!b_.is_zero() && !o.b_.is_zero()) na += b_ * o.b_ * field_->delta_q;
  CubicElement nb = a_ * o.b_ + b_ * o.a_;
  a_ = std::move(na);
  b_ = std::move(nb);
  return *this;
}

SexticElement operator-(const SexticElement& x) { return SexticElement(x.field_, -x.a_, -x.b_); }

std::string SexticElement::str() const { return "[" + a_.str() + "] + [" + b_.str() + "]*sqrt(d)"; }

std::size_t height_bits(const SexticElement& e) { return std::max(height_bits(e.a()), height_bits(e.b())); }

SexticField::SexticField(CyclicCubicField cubic, const BigInt& delta) {
  if (delta == 0 || delta == 1 || !is_squarefree(delta)) {
    throw std::invalid_argument("sextic field needs a square-free delta != 0, 1; got " + delta.get_str());
  }
  auto d = std::make_shared<detail::SexticFieldData>(
      detail::SexticFieldData{std::move(cubic), delta, Rational(delta)});
  data_ = d;
}

const CyclicCubicField& SexticField::cubic() const { return data_->cubic; }
const BigInt& SexticField::delta() const { return data_->delta; }

SexticElement SexticField::embed(const Rational& q) const {
  return SexticElement(data_, data_->cubic.embed(q), data_->cubic.embed(0));
}

SexticElement SexticField::lift(const CubicElement& a) const {
  return SexticElement(data_, a, data_->cubic.embed(0));
}

SexticElement SexticField::make(const CubicElement& a, const CubicElement& b) const {
  return SexticElement(data_, a, b);
}

SexticElement SexticField::sqrt_delta() const {
  return SexticElement(data_, data_->cubic.embed(0), data_->cubic.embed(1));
}

SexticElement SexticField::rho(const SexticElement& e) const {
  const auto& k = data_->cubic;
  return SexticElement(data_, k.sigma(e.a()), -k.sigma(e.b()));
}

SexticElement SexticField::rho_power(const SexticElement& e, int k) const {
  k = ((k % 6) + 6) % 6;
  SexticElement r = e;
  for (int i = 0; i < k; ++i) r = rho(r);
  return r;
}

// --- numerics ---------------------------------------------------------------

std::vector<Rational> approximate_real_roots(const UniPoly& p, unsigned bits) {
  const Rational width(BigInt(1), BigInt(1) << bits);
  std::vector<Rational> out;
  for (auto iv : isolate_real_roots(p)) {
    iv = refine_root(p, iv, width);
    out.push_back((iv.lo + iv.hi) / Rational(2));
  }
  return out;
}

Rational rational_reconstruct(const Rational& x, const BigInt& bound) {
  // Convergents h/k of the continued fraction of x.
  BigInt h_prev = 1, h = floor(x);
  BigInt k_prev = 0, k = 1;
  Rational frac = x - Rational(h);
  while (!frac.is_zero()) {
    const Rational inv = frac.inverse();
    const BigInt a = floor(inv);
    const BigInt h_next = a * h + h_prev;
    const BigInt k_next = a * k + k_prev;
    if (k_next > bound) break;
    h_prev = h;
    h = h_next;
    k_prev = k;
    k = k_next;
    frac = inv - Rational(a);
  }
  return Rational(h, k);
}

IsomorphismResult is_isomorphic_cubic(const UniPoly& f, const UniPoly& g,
                                      const EmbeddingSearchOptions& options) {
  const CyclicCubicField kf(f);
  const CyclicCubicField kg(g);
  IsomorphismResult result;
  if (f == g) {
    result.embedding = CubicEmbedding{{Rational(0), Rational(1), Rational(0)}};
    return result;
  }
  const ConductorEstimate cf = cubic_conductor_heuristic(kf);
  const ConductorEstimate cg = cubic_conductor_heuristic(kg);
  if (conductors_conflict(cf, cg) || conductors_conflict(cg, cf)) {
    result.absence = EmbeddingAbsence::proved_distinct;
    result.reason = "certified ramification differs (" + cf.determined.get_str() + " vs " +
                    cg.determined.get_str() + ")";
    return result;
  }

  const auto rf = approximate_real_roots(f, options.precision_bits);
  const auto rg = approximate_real_roots(g, options.precision_bits);
  if (rf.size() != 3 || rg.size() != 3) {
    throw std::logic_error("cyclic cubic without three real roots");
  }
  const BigInt bound = BigInt(1) << options.denominator_bits;
  std::array<std::array<Rational, 3>, 3> V;
  for (int i = 0; i < 3; ++i) V[i] = {Rational(1), rf[i], rf[i] * rf[i]};
  const Rational det = det3(V);

  std::array<int, 3> perm{0, 1, 2};
  do {
    std::array<Rational, 3> c;
    for (int col = 0; col < 3; ++col) {
      auto M = V;
      for (int i = 0; i < 3; ++i) M[i][col] = rg[perm[i]];
      c[col] = rational_reconstruct(det3(M) / det, bound);
    }
    const CubicElement e = kf.element(c[0], c[1], c[2]);
    if (horner(g, e, kf.data()).is_zero()) {
      result.embedding = CubicEmbedding{c};
      return result;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));

  result.absence = EmbeddingAbsence::not_found_within_bound;
  result.reason = "no embedding with denominators below 2^" + std::to_string(options.denominator_bits) +
                  " at " + std::to_string(options.precision_bits) + " bits";
  return result;
}

ConductorEstimate cubic_conductor_heuristic(const UniPoly& f) {
  if (f.degree() != 3) throw std::invalid_argument("conductor heuristic needs a cubic");
  return conductor_from_integer_form(primitive_integer(f).coeffs);
}

ConductorEstimate cubic_conductor_heuristic(const CyclicCubicField& k) {
  return cubic_conductor_heuristic(k.polynomial());
}

}  // namespace sextic
