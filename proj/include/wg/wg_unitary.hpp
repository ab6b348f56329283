#pragma once

// Unitary group: Gram matrix on S_n, the content products c_lambda, the
// Weingarten class function and the assembled Weingarten matrix.
//
// Every operation is templated on the coefficient ring R: TauRational for
// symbolic tau (pass TauRational::tau()), Rational for a concrete value.

#include <vector>

#include "wg/coeffring.hpp"
#include "wg/groupalg.hpp"
#include "wg/matrix.hpp"
#include "wg/report.hpp"
#include "wg/symcore.hpp"

namespace wg {

template <CoefficientRing R>
struct WeingartenTableU {
  int n = 0;
  R tau;
  std::vector<Permutation> basis;  // S_n, lexicographic
  Matrix<R> gram;
  Matrix<R> weingarten;
  std::vector<Partition> excluded;  // lambda with c_lambda = 0
};

/// prod over boxes (i,j) of lambda of (tau + j - i).
template <CoefficientRing R>
R c_unitary(const Partition& lambda, const R& tau);

/// G[s, s'] = tau^{#cycles(s^{-1} s')} over S_n in lexicographic order.
template <CoefficientRing R>
Matrix<R> gram_unitary(int n, const R& tau);

/// w(mu) = (1/n!) sum_{lambda: c_lambda != 0} c_lambda^{-1} chi_lambda(1) chi_lambda(mu).
template <CoefficientRing R>
R wg_function_unitary(const Partition& mu, const R& tau);

/// W[s'', s'] = w(cycle type of s'' s'^{-1}), built from the p(n) class
/// function values; never by inverting the Gram matrix.
template <CoefficientRing R>
WeingartenTableU<R> weingarten_unitary(int n, const R& tau);

/// Partitions lambda of n with c_lambda = 0 (empty for symbolic tau).
template <CoefficientRing R>
std::vector<Partition> excluded_unitary(int n, const R& tau);

/// The Jucys product identity
///   (tau + m_1)...(tau + m_n) = sum_sigma tau^{#cycles(sigma)} sigma,
/// compared term by term, plus the n! distinct raw terms.
template <CoefficientRing R>
Report verify_jucys(int n, const R& tau);

/// G = sum_lambda c_lambda P_lambda as algebra elements, and the Gram matrix
/// equals the regular-representation matrix of the Jucys product.
template <CoefficientRing R>
Report verify_unitary_spectral(int n, const R& tau);

}  // namespace wg
