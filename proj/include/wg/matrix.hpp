#pragma once

#include <cstddef>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

#include "wg/coeffring.hpp"
#include "wg/report.hpp"

namespace wg {

template <CoefficientRing R>
class Matrix;

namespace detail {
// Product over a common denominator: entries are scaled to polynomials,
// multiplied without intermediate gcds, and reduced once at the end.
Matrix<TauRational> multiply_over_common_denominator(const Matrix<TauRational>& a, const Matrix<TauRational>& b);
}  // namespace detail

/// Dense row-major matrix over an exact coefficient ring.
template <CoefficientRing R>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, R(0)) {}

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = R(1);
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  R& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const R& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  Matrix transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  bool is_symmetric() const {
    if (rows_ != cols_) return false;
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = i + 1; j < cols_; ++j)
        if (!((*this)(i, j) == (*this)(j, i))) return false;
    return true;
  }

  /// Entrywise map into another ring.
  template <class F>
  auto map(F&& f) const -> Matrix<decltype(f(std::declval<const R&>()))> {
    Matrix<decltype(f(std::declval<const R&>()))> out(rows_, cols_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) out(i, j) = f((*this)(i, j));
    return out;
  }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw DomainError("matrix product: inner dimensions differ");
    if constexpr (std::is_same_v<R, TauRational>) return detail::multiply_over_common_denominator(a, b);
    Matrix c(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i) {
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const R& aik = a(i, k);
        if (is_zero(aik)) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) {
          const R& bkj = b(k, j);
          if (is_zero(bkj)) continue;
          R t = aik;
          t *= bkj;
          c(i, j) += t;
        }
      }
    }
    return c;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<R> data_;
};

/// Exact checks of GWG = G, WGW = W and symmetry of W.
template <CoefficientRing R>
Report pseudo_inverse_check(const Matrix<R>& gram, const Matrix<R>& weingarten) {
  Report r{"pseudo-inverse", {}};
  if (gram.rows() != gram.cols() || weingarten.rows() != weingarten.cols() ||
      gram.rows() != weingarten.rows()) {
    r.add("square matrices of equal size", false);
    return r;
  }
  const Matrix<R> gw = gram * weingarten;
  r.add("GWG = G", gw * gram == gram);
  r.add("WGW = W", weingarten * gw == weingarten);
  r.add("W symmetric", weingarten.is_symmetric());
  return r;
}

/// W * G = identity.
template <CoefficientRing R>
bool is_left_inverse(const Matrix<R>& w, const Matrix<R>& g) {
  return w * g == Matrix<R>::identity(g.rows());
}

}  // namespace wg
