#pragma once

// Sparse arithmetic in the group algebra of S_n over an exact coefficient
// ring, plus the Jucys-Murphy elements and hyperoctahedral averaging.

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "wg/coeffring.hpp"
#include "wg/matrix.hpp"
#include "wg/symcore.hpp"

namespace wg {

/// Finite sum of coefficient * permutation, all permutations of one degree.
/// Terms iterate in canonical permutation order and zero coefficients are
/// never stored.
template <CoefficientRing R>
class AlgebraElement {
 public:
  using Terms = std::map<Permutation, R>;

  AlgebraElement() = default;
  explicit AlgebraElement(std::size_t degree) : degree_(degree) {}

  static AlgebraElement unit(std::size_t degree) { return basis(Permutation(degree)); }
  static AlgebraElement basis(const Permutation& p, R coeff = R(1)) {
    AlgebraElement a(p.size());
    a.add_term(p, std::move(coeff));
    return a;
  }

  std::size_t degree() const { return degree_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  const Terms& terms() const { return terms_; }

  R coefficient(const Permutation& p) const {
    auto it = terms_.find(p);
    return it == terms_.end() ? R(0) : it->second;
  }

  void add_term(const Permutation& p, const R& coeff) {
    if (p.size() != degree_) throw DomainError("algebra element: permutation degree mismatch");
    if (wg::is_zero(coeff)) return;
    auto [it, inserted] = terms_.try_emplace(p, coeff);
    if (!inserted) {
      it->second += coeff;
      if (wg::is_zero(it->second)) terms_.erase(it);
    }
  }

  AlgebraElement& operator+=(const AlgebraElement& o) {
    check_degree(o);
    for (const auto& [p, c] : o.terms_) add_term(p, c);
    return *this;
  }
  AlgebraElement& operator-=(const AlgebraElement& o) {
    check_degree(o);
    for (const auto& [p, c] : o.terms_) {
      R neg(0);
      neg -= c;
      add_term(p, neg);
    }
    return *this;
  }
  AlgebraElement& operator*=(const R& s) {
    if (wg::is_zero(s)) {
      terms_.clear();
      return *this;
    }
    for (auto& [p, c] : terms_) c *= s;
    return *this;
  }

  friend AlgebraElement operator+(AlgebraElement a, const AlgebraElement& b) { return a += b; }
  friend AlgebraElement operator-(AlgebraElement a, const AlgebraElement& b) { return a -= b; }
  friend AlgebraElement operator*(AlgebraElement a, const R& s) { return a *= s; }
  friend AlgebraElement operator*(const R& s, AlgebraElement a) { return a *= s; }
  friend AlgebraElement operator*(const AlgebraElement& a, const AlgebraElement& b) {
    return multiply(a, b);
  }

  friend bool operator==(const AlgebraElement& a, const AlgebraElement& b) {
    return a.degree_ == b.degree_ && a.terms_ == b.terms_;
  }

  /// Convolution: delta_x * delta_y = delta_{x o y}.
  friend AlgebraElement multiply(const AlgebraElement& a, const AlgebraElement& b) {
    a.check_degree(b);
    AlgebraElement out(a.degree_);
    for (const auto& [x, cx] : a.terms_) {
      for (const auto& [y, cy] : b.terms_) {
        R c = cx;
        c *= cy;
        out.add_term(compose(x, y), c);
      }
    }
    return out;
  }

  /// Same element viewed in C[S_m], m >= degree().
  AlgebraElement embed(std::size_t m) const {
    AlgebraElement out(m);
    for (const auto& [p, c] : terms_) out.terms_.emplace(p.embed(m), c);
    return out;
  }

  /// Coefficient-wise conversion into another ring.
  template <CoefficientRing S>
  AlgebraElement<S> convert() const {
    AlgebraElement<S> out(degree_);
    for (const auto& [p, c] : terms_) out.add_term(p, S(c));
    return out;
  }

 private:
  void check_degree(const AlgebraElement& o) const {
    if (degree_ != o.degree_) throw DomainError("algebra elements of different degrees");
  }

  std::size_t degree_ = 0;
  Terms terms_;
};

/// Anti-automorphism sending each permutation to its inverse.
template <CoefficientRing R>
AlgebraElement<R> antipode(const AlgebraElement<R>& a) {
  AlgebraElement<R> out(a.degree());
  for (const auto& [p, c] : a.terms()) out.add_term(p.inverse(), c);
  return out;
}

/// m_k = sum_{i<k} (i k) in C[S_n]; m_1 = 0.
template <CoefficientRing R = Rational>
AlgebraElement<R> jm_element(int k, std::size_t n) {
  if (k < 1 || static_cast<std::size_t>(k) > n) throw DomainError("jm_element: k out of range");
  AlgebraElement<R> m(n);
  for (int i = 1; i < k; ++i) m.add_term(Permutation::transposition(n, i, k), R(1));
  return m;
}

/// prod_{k in ks} (tau + m_k), multiplied left to right in the order given.
template <CoefficientRing R>
AlgebraElement<R> jm_product(const std::vector<int>& ks, std::size_t n, const R& tau) {
  AlgebraElement<R> acc = AlgebraElement<R>::unit(n);
  for (int k : ks) {
    AlgebraElement<R> factor = jm_element<R>(k, n);
    factor += AlgebraElement<R>::basis(Permutation(n), tau);
    acc = multiply(acc, factor);
  }
  return acc;
}

/// (tau + m_1)(tau + m_2)...(tau + m_n) in C[S_n].
template <CoefficientRing R>
AlgebraElement<R> jm_product_unitary(int n, const R& tau) {
  if (n < 1) throw DomainError("jm_product_unitary: n must be >= 1");
  std::vector<int> ks;
  for (int k = 1; k <= n; ++k) ks.push_back(k);
  return jm_product(ks, static_cast<std::size_t>(n), tau);
}

/// (tau + m_{2n-1})...(tau + m_3)(tau + m_1) in C[S_{2n}].
template <CoefficientRing R>
AlgebraElement<R> jm_product_orthogonal(int n, const R& tau) {
  if (n < 1) throw DomainError("jm_product_orthogonal: n must be >= 1");
  std::vector<int> ks;
  for (int k = n; k >= 1; --k) ks.push_back(2 * k - 1);
  return jm_product(ks, static_cast<std::size_t>(2 * n), tau);
}

/// One term of an unexpanded product of (tau + m_k) factors: the permutation
/// picked and the number of factors in which tau was picked.
struct RawTerm {
  Permutation perm;
  int tau_power = 0;
};

/// Every term of prod_{k in ks} (tau + m_k) before like terms are merged.
std::vector<RawTerm> expand_jm_product_raw(const std::vector<int>& ks, std::size_t n);

/// H_n as the closure of its generators s_{2i-1,2i} and
/// s_{2i-1,2i+1} s_{2i,2i+2}, sorted canonically. |H_n| = 2^n n!.
std::vector<Permutation> hyperoctahedral_elements(int n);

/// H_n as the conjugation stabilizer of the adjacent pairing, by brute force
/// over S_{2n}. Sorted canonically.
std::vector<Permutation> hyperoctahedral_by_stabilizer(int n);

/// Factors whose ordered product is sum_{h in H_n} h: n two-term factors
/// averaging each adjacent pair, then block-transposition chains that sweep
/// the block permutations once each.
std::vector<AlgebraElement<Rational>> hyperoctahedral_sum_factors(int n);

/// P_H = (1/|H_n|) sum_{h in H_n} h.
template <CoefficientRing R = Rational>
AlgebraElement<R> average_projector(int n) {
  const auto elems = hyperoctahedral_elements(n);
  AlgebraElement<R> p(static_cast<std::size_t>(2 * n));
  const R weight(Rational(1, static_cast<long>(elems.size())));
  for (const auto& h : elems) p.add_term(h, weight);
  return p;
}

enum class Side { left, right };

/// Matrix of a acting on the group-algebra basis: column j holds the
/// coefficients of a * basis[j] (Side::left) or basis[j] * a (Side::right).
template <CoefficientRing R>
Matrix<R> regular_matrix(const AlgebraElement<R>& a, const std::vector<Permutation>& basis, Side side) {
  std::map<Permutation, std::size_t> index;
  for (std::size_t i = 0; i < basis.size(); ++i) index.emplace(basis[i], i);
  Matrix<R> m(basis.size(), basis.size());
  for (std::size_t j = 0; j < basis.size(); ++j) {
    for (const auto& [p, c] : a.terms()) {
      Permutation img = side == Side::left ? compose(p, basis[j]) : compose(basis[j], p);
      auto it = index.find(img);
      if (it == index.end()) throw DomainError("regular_matrix: basis is not closed under the action");
      m(it->second, j) += c;
    }
  }
  return m;
}

}  // namespace wg
