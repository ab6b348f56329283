#include "wg/coeffring.hpp"

#include <algorithm>

#include "text_scan.hpp"

namespace wg {

// ----------------------------------------------------------------- Rational

Rational::Rational(long num, long den) {
  if (den == 0) throw ArithmeticError("rational with zero denominator");
  q_ = mpq_class(num, den);
  q_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
  detail::TextScanner sc(text, "rational");
  bool neg = sc.accept('-');
  mpz_class num(sc.digits());
  mpz_class den(1);
  if (sc.accept('/')) den = mpz_class(sc.digits());
  sc.finish();
  if (den == 0) sc.fail("zero denominator");
  if (neg) num = -num;
  return Rational(mpq_class(num, den));
}

Rational Rational::inverse() const {
  if (is_zero()) throw ArithmeticError("inverse of zero rational");
  return Rational(mpq_class(1 / q_));
}

Rational Rational::pow(int e) const {
  if (e < 0) return inverse().pow(-e);
  Rational out(1);
  for (int i = 0; i < e; ++i) out *= *this;
  return out;
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw ArithmeticError("division by zero rational");
  q_ /= o.q_;
  return *this;
}

// ------------------------------------------------------------ TauPolynomial

TauPolynomial::TauPolynomial(Rational c) {
  if (!c.is_zero()) coeffs_.push_back(std::move(c));
}

TauPolynomial::TauPolynomial(std::vector<Rational> ascending) : coeffs_(std::move(ascending)) {
  trim();
}

TauPolynomial TauPolynomial::monomial(const Rational& c, int degree) {
  if (degree < 0) throw DomainError("negative monomial degree");
  TauPolynomial p;
  if (c.is_zero()) return p;
  p.coeffs_.assign(static_cast<std::size_t>(degree) + 1, Rational(0));
  p.coeffs_.back() = c;
  return p;
}

void TauPolynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

Rational TauPolynomial::coefficient(int k) const {
  if (k < 0 || k > degree()) return Rational(0);
  return coeffs_[static_cast<std::size_t>(k)];
}

Rational TauPolynomial::evaluate(const Rational& t) const {
  Rational acc(0);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc *= t;
    acc += *it;
  }
  return acc;
}

TauPolynomial TauPolynomial::monic() const {
  if (is_zero() || leading().is_one()) return *this;
  TauPolynomial p = *this;
  p *= leading().inverse();
  return p;
}

std::pair<TauPolynomial, TauPolynomial> TauPolynomial::divmod(const TauPolynomial& divisor) const {
  if (divisor.is_zero()) throw ArithmeticError("polynomial division by zero");
  TauPolynomial rem = *this;
  if (degree() < divisor.degree()) return {TauPolynomial(), rem};
  std::vector<Rational> quot(static_cast<std::size_t>(degree() - divisor.degree()) + 1, Rational(0));
  const Rational inv_lead = divisor.leading().inverse();
  const int dd = divisor.degree();
  while (!rem.is_zero() && rem.degree() >= dd) {
    const int shift = rem.degree() - dd;
    Rational factor = rem.leading() * inv_lead;
    for (int k = 0; k <= dd; ++k)
      rem.coeffs_[static_cast<std::size_t>(k + shift)] -= factor * divisor.coeffs_[static_cast<std::size_t>(k)];
    quot[static_cast<std::size_t>(shift)] = std::move(factor);
    rem.trim();
  }
  return {TauPolynomial(std::move(quot)), rem};
}

TauPolynomial TauPolynomial::gcd(TauPolynomial a, TauPolynomial b) {
  while (!b.is_zero()) {
    TauPolynomial r = a.divmod(b).second;
    a = std::move(b);
    b = r.monic();
  }
  return a.monic();
}

TauPolynomial& TauPolynomial::operator+=(const TauPolynomial& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Rational(0));
  for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] += o.coeffs_[k];
  trim();
  return *this;
}

TauPolynomial& TauPolynomial::operator-=(const TauPolynomial& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Rational(0));
  for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] -= o.coeffs_[k];
  trim();
  return *this;
}

TauPolynomial& TauPolynomial::operator*=(const Rational& c) {
  if (c.is_zero()) {
    coeffs_.clear();
    return *this;
  }
  for (auto& x : coeffs_) x *= c;
  return *this;
}

TauPolynomial operator*(const TauPolynomial& a, const TauPolynomial& b) {
  if (a.is_zero() || b.is_zero()) return TauPolynomial();
  std::vector<Rational> out(a.coeffs_.size() + b.coeffs_.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return TauPolynomial(std::move(out));
}

TauPolynomial operator-(const TauPolynomial& a) {
  TauPolynomial p = a;
  for (auto& x : p.coeffs_) x = -x;
  return p;
}

std::string TauPolynomial::str() const {
  if (is_zero()) return "0";
  std::string s;
  bool first = true;
  for (int k = degree(); k >= 0; --k) {
    const Rational& c = coeffs_[static_cast<std::size_t>(k)];
    if (c.is_zero()) continue;
    const bool neg = c.sign() < 0;
    const Rational mag = neg ? -c : c;
    if (first) {
      if (neg) s += '-';
    } else {
      s += neg ? " - " : " + ";
    }
    first = false;
    if (k == 0) {
      s += mag.str();
      continue;
    }
    if (!mag.is_one()) s += mag.str() + "*";
    s += 't';
    if (k > 1) s += "^" + std::to_string(k);
  }
  return s;
}

namespace {

Rational parse_magnitude(detail::TextScanner& sc) {
  mpz_class num(sc.digits());
  mpz_class den(1);
  if (sc.accept('/')) den = mpz_class(sc.digits());
  if (den == 0) sc.fail("zero denominator");
  return Rational(mpq_class(num, den));
}

TauPolynomial parse_poly(detail::TextScanner& sc) {
  TauPolynomial acc;
  bool neg = sc.accept('-');
  while (true) {
    Rational coeff(1);
    int deg = 0;
    if (sc.peek() == 't') {
      sc.expect('t');
      deg = 1;
      if (sc.accept('^')) deg = sc.integer();
    } else {
      coeff = parse_magnitude(sc);
      if (sc.accept('*')) {
        sc.expect('t');
        deg = 1;
        if (sc.accept('^')) deg = sc.integer();
      }
    }
    if (deg < 0) sc.fail("negative exponent");
    acc += TauPolynomial::monomial(neg ? -coeff : coeff, deg);
    if (sc.accept('+')) {
      neg = false;
    } else if (sc.accept('-')) {
      neg = true;
    } else {
      break;
    }
  }
  return acc;
}

}  // namespace

TauPolynomial TauPolynomial::parse(std::string_view text) {
  detail::TextScanner sc(text, "polynomial");
  TauPolynomial p = parse_poly(sc);
  sc.finish();
  return p;
}

// -------------------------------------------------------------- TauRational

TauRational::TauRational(TauPolynomial num) : num_(std::move(num)), den_(Rational(1)) {}

TauRational::TauRational(TauPolynomial num, TauPolynomial den)
    : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw ArithmeticError("rational function with zero denominator");
  normalize();
}

void TauRational::normalize() {
  if (num_.is_zero()) {
    den_ = TauPolynomial(Rational(1));
    return;
  }
  if (!den_.is_constant()) {
    TauPolynomial g = TauPolynomial::gcd(num_, den_);
    if (!g.is_one()) {
      num_ = num_.divmod(g).first;
      den_ = den_.divmod(g).first;
    }
  }
  if (!den_.leading().is_one()) {
    const Rational inv = den_.leading().inverse();
    num_ *= inv;
    den_ *= inv;
  }
}

TauRational TauRational::inverse() const {
  if (is_zero()) throw ArithmeticError("inverse of zero rational function");
  TauPolynomial n = den_, d = num_;
  const Rational inv = d.leading().inverse();
  n *= inv;
  d *= inv;
  return TauRational(std::move(n), std::move(d), Reduced{});
}

Rational TauRational::evaluate(const Rational& t) const {
  Rational d = den_.evaluate(t);
  if (d.is_zero()) throw PoleError("rational function has a pole at t = " + t.str());
  return num_.evaluate(t) / d;
}

TauRational& TauRational::operator+=(const TauRational& o) {
  if (den_ == o.den_) {
    num_ += o.num_;
    normalize();
    return *this;
  }
  // (a/b) + (c/d) over the common denominator b*(d/g), g = gcd(b,d).
  TauPolynomial g = TauPolynomial::gcd(den_, o.den_);
  TauPolynomial d_over_g = o.den_.divmod(g).first;
  TauPolynomial b_over_g = den_.divmod(g).first;
  num_ = num_ * d_over_g + o.num_ * b_over_g;
  den_ = den_ * d_over_g;
  normalize();
  return *this;
}

TauRational& TauRational::operator*=(const TauRational& o) {
  if (is_zero() || o.is_zero()) {
    *this = TauRational();
    return *this;
  }
  if (den_.is_one() && o.den_.is_one()) {
    num_ = num_ * o.num_;
    return *this;
  }
  // Cross-cancel before multiplying to keep degrees small.
  TauPolynomial g1 = TauPolynomial::gcd(num_, o.den_);
  TauPolynomial g2 = TauPolynomial::gcd(o.num_, den_);
  TauPolynomial n = num_.divmod(g1).first * o.num_.divmod(g2).first;
  TauPolynomial d = den_.divmod(g2).first * o.den_.divmod(g1).first;
  num_ = std::move(n);
  den_ = std::move(d);
  if (!den_.leading().is_one()) {
    const Rational inv = den_.leading().inverse();
    num_ *= inv;
    den_ *= inv;
  }
  return *this;
}

TauRational operator-(const TauRational& a) {
  return TauRational(-a.num_, a.den_, TauRational::Reduced{});
}

std::string TauRational::str() const {
  if (den_.is_one()) return num_.str();
  return "(" + num_.str() + ")/(" + den_.str() + ")";
}

TauRational TauRational::parse(std::string_view text) {
  detail::TextScanner sc(text, "rational function");
  if (sc.peek() != '(') {
    TauPolynomial p = parse_poly(sc);
    sc.finish();
    return TauRational(std::move(p));
  }
  sc.expect('(');
  TauPolynomial num = parse_poly(sc);
  sc.expect(')');
  TauPolynomial den(Rational(1));
  if (sc.accept('/')) {
    sc.expect('(');
    den = parse_poly(sc);
    sc.expect(')');
  }
  sc.finish();
  if (den.is_zero()) sc.fail("zero denominator");
  return TauRational(std::move(num), std::move(den));
}

}  // namespace wg
