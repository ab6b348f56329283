#include "wg/matrix.hpp"

#include <algorithm>

namespace wg::detail {

namespace {

struct Scaled {
  TauPolynomial common;                                       // lcm of all denominators
  std::vector<std::pair<TauPolynomial, TauPolynomial>> cofactor;  // (den, common / den)
  std::vector<TauPolynomial> entries;                         // num * common / den, row-major
};

Scaled scale(const Matrix<TauRational>& m) {
  Scaled s;
  s.common = TauPolynomial(Rational(1));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) {
      const auto& d = m(i, j).denominator();
      if (d.is_one() || s.common.divmod(d).second.is_zero()) continue;
      s.common = s.common * d.divmod(TauPolynomial::gcd(s.common, d)).first;
    }
  s.entries.reserve(m.rows() * m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) {
      const auto& x = m(i, j);
      if (x.is_zero()) {
        s.entries.emplace_back();
        continue;
      }
      auto it = std::find_if(s.cofactor.begin(), s.cofactor.end(), [&](const auto& p) { return p.first == x.denominator(); });
      if (it == s.cofactor.end()) {
        s.cofactor.emplace_back(x.denominator(), s.common.divmod(x.denominator()).first);
        it = s.cofactor.end() - 1;
      }
      s.entries.push_back(x.numerator() * it->second);
    }
  return s;
}

}  // namespace

Matrix<TauRational> multiply_over_common_denominator(const Matrix<TauRational>& a, const Matrix<TauRational>& b) {
  const Scaled sa = scale(a);
  const Scaled sb = scale(b);
  const TauPolynomial den = sa.common * sb.common;
  Matrix<TauRational> c(a.rows(), b.cols());
  std::vector<TauPolynomial> row(b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    std::fill(row.begin(), row.end(), TauPolynomial());
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const auto& aik = sa.entries[i * a.cols() + k];
      if (aik.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) {
        const auto& bkj = sb.entries[k * b.cols() + j];
        if (!bkj.is_zero()) row[j] += aik * bkj;
      }
    }
    for (std::size_t j = 0; j < b.cols(); ++j)
      if (!row[j].is_zero()) c(i, j) = TauRational(std::move(row[j]), den);
  }
  return c;
}

}  // namespace wg::detail
