#include "sextic/unipoly.hpp"

#include <algorithm>
#include <numeric>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace sextic {

namespace {

const Rational kZero{};

int sign_at(const UniPoly& p, const Rational& x) { return p(x).sign(); }

// Sign changes of the Sturm sequence at x, zeros skipped.
int sign_variations(const std::vector<UniPoly>& seq, const Rational& x) {
  int changes = 0;
  int last = 0;
  for (const auto& q : seq) {
    const int s = sign_at(q, x);
    if (s == 0) continue;
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  return changes;
}

std::vector<UniPoly> sturm_sequence(const UniPoly& p) {
  std::vector<UniPoly> seq{p, p.derivative()};
  while (!seq.back().is_zero() && seq.back().degree() > 0) {
    UniPoly r = seq[seq.size() - 2] % seq.back();
    if (r.is_zero()) break;
    seq.push_back(-r);
  }
  return seq;
}

UniPoly squarefree_kernel(const UniPoly& p) {
  const UniPoly g = gcd(p, p.derivative());
  return g.degree() > 0 ? p / g : p;
}

}  // namespace

UniPoly::UniPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

UniPoly::UniPoly(std::initializer_list<Rational> coeffs) : c_(coeffs) { trim(); }

UniPoly::UniPoly(const Rational& constant) {
  if (!constant.is_zero()) c_.push_back(constant);
}

UniPoly UniPoly::monomial(const Rational& c, std::size_t k) {
  if (c.is_zero()) return {};
  std::vector<Rational> v(k + 1);
  v[k] = c;
  return UniPoly(std::move(v));
}

void UniPoly::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

const Rational& UniPoly::coeff(std::size_t i) const { return i < c_.size() ? c_[i] : kZero; }

const Rational& UniPoly::leading() const {
  if (c_.empty()) throw std::domain_error("leading coefficient of the zero polynomial");
  return c_.back();
}

Rational UniPoly::operator()(const Rational& x) const {
  Rational acc;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

UniPoly UniPoly::derivative() const {
  if (c_.size() <= 1) return {};
  std::vector<Rational> d(c_.size() - 1);
  for (std::size_t i = 1; i < c_.size(); ++i) d[i - 1] = c_[i] * Rational(i);
  return UniPoly(std::move(d));
}

UniPoly UniPoly::monic() const {
  if (is_zero()) return {};
  return *this / leading();
}

UniPoly UniPoly::shift(const Rational& r) const {
  // Repeated synthetic division (Taylor shift).
  std::vector<Rational> a = c_;
  const std::size_t n = a.size();
  for (std::size_t i = 0; i + 1 < n; ++i) {
    for (std::size_t j = n - 1; j > i; --j) a[j - 1] += r * a[j];
  }
  return UniPoly(std::move(a));
}

UniPoly UniPoly::reversed() const {
  std::vector<Rational> a(c_.rbegin(), c_.rend());
  return UniPoly(std::move(a));
}

UniPoly UniPoly::compose(const UniPoly& inner) const {
  UniPoly acc;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * inner + UniPoly(*it);
  return acc;
}

UniPoly UniPoly::scale_variable(const Rational& k) const {
  std::vector<Rational> a = c_;
  Rational pk(1);
  for (auto& v : a) {
    v *= pk;
    pk *= k;
  }
  return UniPoly(std::move(a));
}

UniPoly& UniPoly::operator+=(const UniPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  trim();
  return *this;
}

UniPoly& UniPoly::operator-=(const UniPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  trim();
  return *this;
}

UniPoly& UniPoly::operator*=(const UniPoly& o) {
  if (is_zero() || o.is_zero()) {
    c_.clear();
    return *this;
  }
  std::vector<Rational> r(c_.size() + o.c_.size() - 1);
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i].is_zero()) continue;
    for (std::size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
  }
  c_ = std::move(r);
  trim();
  return *this;
}

UniPoly& UniPoly::operator*=(const Rational& k) {
  if (k.is_zero()) {
    c_.clear();
    return *this;
  }
  for (auto& v : c_) v *= k;
  return *this;
}

UniPoly& UniPoly::operator/=(const Rational& k) {
  if (k.is_zero()) throw std::domain_error("polynomial divided by zero");
  for (auto& v : c_) v /= k;
  return *this;
}

UniPoly operator-(const UniPoly& a) {
  UniPoly r = a;
  for (auto& v : r.c_) v = -v;
  return r;
}

UniPoly operator/(const UniPoly& a, const UniPoly& b) { return divmod(a, b).first; }
UniPoly operator%(const UniPoly& a, const UniPoly& b) { return divmod(a, b).second; }

std::string UniPoly::str(char var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    const Rational& c = c_[static_cast<std::size_t>(i)];
    if (c.is_zero()) continue;
    const bool neg = c.sign() < 0;
    const Rational mag = c.abs();
    if (first) {
      if (neg) os << '-';
    } else {
      os << (neg ? " - " : " + ");
    }
    first = false;
    const bool unit = mag.is_one();
    if (i == 0 || !unit) {
      os << mag;
      if (i > 0) os << '*';
    }
    if (i >= 1) os << var;
    if (i >= 2) os << '^' << i;
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const UniPoly& p) { return os << p.str(); }

UniPoly pow(const UniPoly& base, unsigned exponent) {
  UniPoly result(Rational(1));
  UniPoly b = base;
  while (exponent > 0) {
    if (exponent & 1U) result *= b;
    exponent >>= 1U;
    if (exponent > 0) b *= b;
  }
  return result;
}

std::pair<UniPoly, UniPoly> divmod(const UniPoly& a, const UniPoly& b) {
  if (b.is_zero()) throw std::domain_error("polynomial division by zero");
  if (a.degree() < b.degree()) return {UniPoly{}, a};
  std::vector<Rational> rem = a.coefficients();
  const int db = b.degree();
  const Rational& lb = b.leading();
  std::vector<Rational> quot(static_cast<std::size_t>(a.degree() - db + 1));
  for (int i = a.degree(); i >= db; --i) {
    const Rational coef = rem[static_cast<std::size_t>(i)] / lb;
    quot[static_cast<std::size_t>(i - db)] = coef;
    if (coef.is_zero()) continue;
    for (int j = 0; j <= db; ++j) {
      rem[static_cast<std::size_t>(i - db + j)] -= coef * b.coeff(static_cast<std::size_t>(j));
    }
  }
  rem.resize(static_cast<std::size_t>(db));
  return {UniPoly(std::move(quot)), UniPoly(std::move(rem))};
}

UniPoly gcd(const UniPoly& a, const UniPoly& b) {
  UniPoly x = a, y = b;
  while (!y.is_zero()) {
    UniPoly r = x % y;
    x = std::move(y);
    y = std::move(r);
  }
  return x.monic();
}

Xgcd xgcd(const UniPoly& a, const UniPoly& b) {
  UniPoly r0 = a, r1 = b;
  UniPoly s0(Rational(1)), s1;
  UniPoly t0, t1(Rational(1));
  while (!r1.is_zero()) {
    auto [q, r] = divmod(r0, r1);
    r0 = std::move(r1);
    r1 = std::move(r);
    UniPoly s2 = s0 - q * s1;
    s0 = std::move(s1);
    s1 = std::move(s2);
    UniPoly t2 = t0 - q * t1;
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (r0.is_zero()) return {};
  const Rational lc = r0.leading();
  return {r0 / lc, s0 / lc, t0 / lc};
}

Rational resultant(const UniPoly& a, const UniPoly& b) {
  UniPoly A = a, B = b;
  Rational acc(1);
  while (true) {
    if (A.is_zero() || B.is_zero()) return Rational(0);
    const int m = A.degree();
    const int n = B.degree();
    if (n == 0) return acc * pow(B.leading(), static_cast<unsigned>(m));
    if (m == 0) return acc * pow(A.leading(), static_cast<unsigned>(n));
    UniPoly R = A % B;
    if (R.is_zero()) return Rational(0);
    const int r = R.degree();
    if ((m * n) % 2 == 1) acc = -acc;
    acc *= pow(B.leading(), static_cast<unsigned>(m - r));
    A = std::move(B);
    B = std::move(R);
  }
}

Rational discriminant(const UniPoly& p) {
  const int n = p.degree();
  if (n < 1) throw std::invalid_argument("discriminant of a constant polynomial");
  Rational r = resultant(p, p.derivative()) / p.leading();
  if ((n * (n - 1) / 2) % 2 == 1) r = -r;
  return r;
}

Rational cubic_discriminant(const UniPoly& p) {
  if (p.degree() != 3) {
    throw std::invalid_argument("cubic_discriminant: degree " + std::to_string(p.degree()) +
                                " polynomial");
  }
  return cubic_discriminant(p.coeff(3), p.coeff(2), p.coeff(1), p.coeff(0));
}

SquarefreeDecomposition squarefree_decomposition(const UniPoly& p) {
  if (p.is_zero()) throw std::invalid_argument("squarefree_decomposition of zero");
  SquarefreeDecomposition out{p.leading(), {}};
  const UniPoly f = p.monic();
  if (f.degree() == 0) return out;
  const UniPoly fp = f.derivative();
  const UniPoly a0 = gcd(f, fp);
  UniPoly b = f / a0;
  UniPoly c = fp / a0;
  UniPoly d = c - b.derivative();
  for (unsigned i = 1; b.degree() > 0; ++i) {
    const UniPoly a = gcd(b, d);
    if (a.degree() > 0) out.factors.push_back({a, i});
    b = b / a;
    c = d / a;
    d = c - b.derivative();
  }
  return out;
}

UniPoly reassemble(const SquarefreeDecomposition& d) {
  UniPoly r(d.content);
  for (const auto& f : d.factors) r *= pow(f.factor, f.multiplicity);
  return r;
}

IntegerPoly primitive_integer(const UniPoly& p) {
  if (p.is_zero()) throw std::invalid_argument("primitive_integer of zero");
  BigInt l = 1;
  for (const auto& c : p.coefficients()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.den().get_mpz_t());
  std::vector<BigInt> ints;
  ints.reserve(p.coefficients().size());
  BigInt g = 0;
  for (const auto& c : p.coefficients()) {
    BigInt v = c.num() * (l / c.den());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
    ints.push_back(v);
  }
  if (ints.back() < 0) g = -g;
  for (auto& v : ints) v /= g;
  return {std::move(ints), Rational(g, l)};
}

UniPoly from_integers(const std::vector<BigInt>& coeffs) {
  std::vector<Rational> v;
  v.reserve(coeffs.size());
  for (const auto& c : coeffs) v.emplace_back(c);
  return UniPoly(std::move(v));
}

std::vector<RootInterval> isolate_real_roots(const UniPoly& p_in) {
  if (p_in.is_zero()) throw std::invalid_argument("isolate_real_roots of zero");
  std::vector<RootInterval> roots;
  if (p_in.degree() < 1) return roots;
  const UniPoly p = squarefree_kernel(p_in).monic();
  const auto seq = sturm_sequence(p);

  Rational bound(0);
  for (const auto& c : p.coefficients()) bound = std::max(bound, c.abs());
  bound += Rational(2);

  const int deg = p.degree();
  struct Job {
    Rational a, b;
    int va, vb;
  };
  std::vector<Job> stack{{-bound, bound, sign_variations(seq, -bound), sign_variations(seq, bound)}};
  while (!stack.empty()) {
    Job j = stack.back();
    stack.pop_back();
    const int count = j.va - j.vb;
    if (count == 0) continue;
    if (count == 1) {
      roots.push_back({j.a, j.b});
      continue;
    }
    // Split at a non-root near the middle; endpoints stay non-roots.
    Rational mid;
    for (int k = 0; k <= deg + 1; ++k) {
      const Rational t = Rational(1, 2) + Rational(k % 2 == 0 ? k / 2 : -(k + 1) / 2, 2 * deg + 6);
      mid = j.a + (j.b - j.a) * t;
      if (!p(mid).is_zero()) break;
    }
    const int vm = sign_variations(seq, mid);
    stack.push_back({mid, j.b, vm, j.vb});
    stack.push_back({j.a, mid, j.va, vm});
  }
  std::sort(roots.begin(), roots.end(),
            [](const RootInterval& x, const RootInterval& y) { return x.hi < y.hi; });
  return roots;
}

RootInterval refine_root(const UniPoly& p, RootInterval iv, const Rational& width) {
  if (iv.lo == iv.hi) return iv;
  if (p(iv.hi).is_zero()) return {iv.hi, iv.hi};
  int shi = sign_at(p, iv.hi);
  while (iv.hi - iv.lo > width) {
    const Rational mid = (iv.lo + iv.hi) / Rational(2);
    const int sm = sign_at(p, mid);
    if (sm == 0) return {mid, mid};
    if (sm != shi) {
      iv.lo = mid;
    } else {
      iv.hi = mid;
      shi = sm;
    }
  }
  return iv;
}

std::vector<Rational> rational_roots(const UniPoly& p) {
  std::vector<Rational> out;
  if (p.is_zero() || p.degree() < 1) return out;
  const UniPoly sf = squarefree_kernel(p);
  const IntegerPoly ip = primitive_integer(sf);
  const UniPoly q = from_integers(ip.coeffs);
  const BigInt lc = abs(ip.coeffs.back());
  const Rational width(BigInt(1), lc);
  for (auto iv : isolate_real_roots(q)) {
    iv = refine_root(q, iv, width);
    if (iv.lo == iv.hi) {
      out.push_back(iv.lo);
      continue;
    }
    // A rational root r has lc*r integral; (lc*lo, lc*hi] holds at most one integer.
    const BigInt k = floor(Rational(lc) * iv.hi);
    const Rational cand(k, lc);
    if (cand > iv.lo && q(cand).is_zero()) out.push_back(cand);
  }
  return out;
}

bool has_rational_root(const UniPoly& p) { return !rational_roots(p).empty(); }

UniPoly interpolate(const std::vector<Rational>& xs, const std::vector<Rational>& ys) {
  if (xs.size() != ys.size() || xs.empty()) {
    throw std::invalid_argument("interpolate: mismatched or empty samples");
  }
  const std::size_t n = xs.size();
  std::vector<Rational> dd = ys;
  for (std::size_t j = 1; j < n; ++j) {
    for (std::size_t i = n - 1; i >= j; --i) {
      const Rational den = xs[i] - xs[i - j];
      if (den.is_zero()) throw std::invalid_argument("interpolate: repeated abscissa");
      dd[i] = (dd[i] - dd[i - 1]) / den;
    }
  }
  UniPoly r(dd[n - 1]);
  for (std::size_t k = n - 1; k-- > 0;) {
    r = r * UniPoly{-xs[k], Rational(1)} + UniPoly(dd[k]);
  }
  return r;
}

}  // namespace sextic
