#pragma once

// Exact coefficient rings: rationals, polynomials in tau, and reduced
// rational functions in tau. Rendering uses the variable letter "t".

#include <gmpxx.h>

#include <compare>
#include <concepts>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "wg/errors.hpp"

namespace wg {

/// Arbitrary-precision rational, always in lowest terms with positive
/// denominator.
class Rational {
 public:
  Rational() = default;
  template <std::integral I>
  Rational(I v) : q_(static_cast<long>(v)) {}  // NOLINT(google-explicit-constructor)
  Rational(long num, long den);
  explicit Rational(mpq_class q) : q_(std::move(q)) { q_.canonicalize(); }

  static Rational parse(std::string_view text);  // "p", "-p", "p/q"
  std::string str() const { return q_.get_str(); }

  const mpq_class& value() const { return q_; }
  mpz_class numerator() const { return q_.get_num(); }
  mpz_class denominator() const { return q_.get_den(); }

  bool is_zero() const { return sgn(q_) == 0; }
  bool is_one() const { return q_ == 1; }
  bool is_integer() const { return q_.get_den() == 1; }
  int sign() const { return sgn(q_); }
  double to_double() const { return q_.get_d(); }

  /// Throws ArithmeticError on zero.
  Rational inverse() const;
  Rational pow(int e) const;

  Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
  Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
  Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  friend Rational operator-(const Rational& a) { return Rational(mpq_class(-a.q_)); }

  friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    int c = cmp(a.q_, b.q_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

 private:
  mpq_class q_;
};

/// Polynomial in tau with rational coefficients, ascending degree, no
/// trailing zeros. The zero polynomial has no coefficients.
class TauPolynomial {
 public:
  TauPolynomial() = default;
  TauPolynomial(Rational c);  // NOLINT(google-explicit-constructor)
  template <std::integral I>
  TauPolynomial(I c) : TauPolynomial(Rational(c)) {}  // NOLINT
  explicit TauPolynomial(std::vector<Rational> ascending);

  static TauPolynomial tau() { return monomial(Rational(1), 1); }
  static TauPolynomial monomial(const Rational& c, int degree);

  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<Rational>& coefficients() const { return coeffs_; }
  Rational coefficient(int k) const;
  const Rational& leading() const { return coeffs_.back(); }
  bool is_zero() const { return coeffs_.empty(); }
  bool is_constant() const { return coeffs_.size() <= 1; }
  bool is_one() const { return coeffs_.size() == 1 && coeffs_[0].is_one(); }

  Rational evaluate(const Rational& t) const;
  TauPolynomial monic() const;

  /// Quotient and remainder; divisor must be nonzero.
  std::pair<TauPolynomial, TauPolynomial> divmod(const TauPolynomial& divisor) const;
  /// Monic gcd; gcd(0, 0) = 0.
  static TauPolynomial gcd(TauPolynomial a, TauPolynomial b);

  TauPolynomial& operator+=(const TauPolynomial& o);
  TauPolynomial& operator-=(const TauPolynomial& o);
  TauPolynomial& operator*=(const TauPolynomial& o) { return *this = *this * o; }
  TauPolynomial& operator*=(const Rational& c);

  friend TauPolynomial operator+(TauPolynomial a, const TauPolynomial& b) { return a += b; }
  friend TauPolynomial operator-(TauPolynomial a, const TauPolynomial& b) { return a -= b; }
  friend TauPolynomial operator*(const TauPolynomial& a, const TauPolynomial& b);
  friend TauPolynomial operator-(const TauPolynomial& a);

  friend bool operator==(const TauPolynomial& a, const TauPolynomial& b) = default;

  /// Descending degree, e.g. "t^3 + t^2 - 2*t".
  std::string str() const;
  static TauPolynomial parse(std::string_view text);

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

/// Reduced rational function num/den in tau: gcd(num, den) = 1 and den monic.
class TauRational {
 public:
  TauRational() : den_(Rational(1)) {}
  TauRational(TauPolynomial num);  // NOLINT(google-explicit-constructor)
  TauRational(Rational c) : TauRational(TauPolynomial(std::move(c))) {}  // NOLINT
  template <std::integral I>
  TauRational(I c) : TauRational(Rational(c)) {}  // NOLINT
  /// Throws ArithmeticError if den is zero.
  TauRational(TauPolynomial num, TauPolynomial den);

  static TauRational tau() { return TauRational(TauPolynomial::tau()); }

  const TauPolynomial& numerator() const { return num_; }
  const TauPolynomial& denominator() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_.is_one(); }
  bool is_constant() const { return den_.is_one() && num_.is_constant(); }

  /// Throws ArithmeticError on zero.
  TauRational inverse() const;
  /// Throws PoleError when the denominator vanishes at t.
  Rational evaluate(const Rational& t) const;

  TauRational& operator+=(const TauRational& o);
  TauRational& operator-=(const TauRational& o) { return *this += -o; }
  TauRational& operator*=(const TauRational& o);
  TauRational& operator/=(const TauRational& o) { return *this *= o.inverse(); }

  friend TauRational operator+(TauRational a, const TauRational& b) { return a += b; }
  friend TauRational operator-(TauRational a, const TauRational& b) { return a -= b; }
  friend TauRational operator*(TauRational a, const TauRational& b) { return a *= b; }
  friend TauRational operator/(TauRational a, const TauRational& b) { return a /= b; }
  friend TauRational operator-(const TauRational& a);

  friend bool operator==(const TauRational& a, const TauRational& b) = default;

  /// "(-1)/(t^3 - t)"; polynomials render bare, constants as "p/q".
  std::string str() const;
  static TauRational parse(std::string_view text);

 private:
  struct Reduced {};
  TauRational(TauPolynomial num, TauPolynomial den, Reduced)
      : num_(std::move(num)), den_(std::move(den)) {}
  void normalize();

  TauPolynomial num_;
  TauPolynomial den_;
};

// Uniform helpers so templates can treat Rational and TauRational alike.
inline bool is_zero(const Rational& x) { return x.is_zero(); }
inline bool is_zero(const TauPolynomial& x) { return x.is_zero(); }
inline bool is_zero(const TauRational& x) { return x.is_zero(); }
inline std::string render(const Rational& x) { return x.str(); }
inline std::string render(const TauPolynomial& x) { return x.str(); }
inline std::string render(const TauRational& x) { return x.str(); }

/// Integer power of tau in the ring R (Rational for a concrete tau).
template <class R>
R power(const R& base, int e) {
  R out(1);
  for (int i = 0; i < e; ++i) out *= base;
  return out;
}

/// Coefficient rings accepted by the group-algebra and matrix templates.
template <class R>
concept CoefficientRing = requires(R a, const R& b) {
  { a += b };
  { a -= b };
  { a *= b };
  { a == b } -> std::convertible_to<bool>;
  { is_zero(b) } -> std::convertible_to<bool>;
  R(1);
};

}  // namespace wg
