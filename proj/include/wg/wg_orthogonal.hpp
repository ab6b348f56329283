#pragma once

// Orthogonal group: pairings as basis, coset representatives sigma_pi of
// S_{2n}/H_n, the Gram matrix tau^{loops}, the projectors P_{2 lambda}
// restricted to the pairing space, and the assembled Weingarten matrix.
// Also the exact checks of the product identity over pairings, the
// stability lemma, the key identity and the doubling proposition.

#include <cstdint>
#include <map>
#include <vector>

#include "wg/coeffring.hpp"
#include "wg/groupalg.hpp"
#include "wg/matrix.hpp"
#include "wg/report.hpp"
#include "wg/symcore.hpp"

namespace wg {

template <CoefficientRing R>
struct WeingartenTableO {
  int n = 0;
  R tau;
  std::vector<Pairing> basis;  // enumerate_pairings order
  Matrix<R> gram;
  Matrix<R> weingarten;
  std::vector<Partition> excluded;
};

struct CosetRepresentative {
  Pairing pairing;
  Permutation sigma;  // sigma beta_n sigma^{-1} = pairing
};

/// (1 2)(3 4)...(2n-1 2n).
Pairing beta(int n);

/// sigma_pi from the inductive construction: if pi(2n) = 2n-1 extend the
/// representative of the restriction; otherwise
/// sigma_pi = s_{pi(2n), 2n-1} sigma_{pi'} with pi' the restriction of the
/// conjugated pairing.
CosetRepresentative coset_representative(const Pairing& pi);

/// Some sigma with sigma from sigma^{-1} = to, matching the k-th canonical
/// pair of `from` onto the k-th canonical pair of `to`.
Permutation matching_conjugator(const Pairing& from, const Pairing& to);

/// Centralizer of pi in S_{2n}, |C| = 2^n n!.
std::vector<Permutation> centralizer(const Pairing& pi);

/// Half the cycle lengths of pi pi', one entry per loop; a partition of n
/// that determines the double coset of the pair.
Partition coset_type(const Pairing& pi, const Pairing& pi_prime);

/// prod over boxes (i,j) of lambda of (tau + 2j - 1 - i), 1-based boxes.
template <CoefficientRing R>
R c_orthogonal(const Partition& lambda, const R& tau);

/// G[pi, pi'] = tau^{loop_count(pi, pi')}.
template <CoefficientRing R>
Matrix<R> gram_orthogonal(int n, const R& tau);

template <CoefficientRing R>
std::vector<Partition> excluded_orthogonal(int n, const R& tau);

/// Number of elements of each cycle type in {sigma : sigma pi' = pi sigma},
/// enumerated as the coset sigma0 * C(pi').
std::map<Partition, std::uint64_t> coset_class_histogram(const Pairing& pi, const Pairing& pi_prime,
                                                         const Permutation& sigma0);

/// (P_{2 lambda})_{pi, pi'} = (chi_{2 lambda}(1)/(2n)!) sum_{sigma pi' = pi sigma} chi_{2 lambda}(sigma^{-1}).
Rational projector_entry(const Partition& lambda, const Pairing& pi, const Pairing& pi_prime);
/// Same sum, with the coset generated from an explicitly supplied sigma0.
Rational projector_entry(const Partition& lambda, const Pairing& pi, const Pairing& pi_prime,
                         const Permutation& sigma0);

/// W[pi, pi'] = sum_{lambda: c_lambda != 0} c_lambda^{-1} (P_{2 lambda})_{pi, pi'}.
/// Entries are computed once per coset type and shared.
template <CoefficientRing R>
WeingartenTableO<R> weingarten_orthogonal(int n, const R& tau);

/// Same Weingarten matrix assembled from the Young-module central
/// idempotents acting on sigma_{pi'} P_H (independent of projector_entry).
template <CoefficientRing R>
Matrix<R> weingarten_orthogonal_by_idempotents(int n, const R& tau);

/// (tau + m_{2n-1})...(tau + m_1) = sum_pi sigma_pi tau^{loops(beta_n, pi)}.
template <CoefficientRing R>
Report verify_oid(int n, const R& tau);

/// G P_H = P_H G, and sigma_pi P_H G = sum_{pi'} G[pi', pi] sigma_{pi'} P_H
/// with the extracted matrix equal to gram_orthogonal.
template <CoefficientRing R>
Report verify_stability_lemma(int n, const R& tau);

/// P_H (m_{2k} - m_{2k-1} - 1) = 0.
Report verify_key_identity(int n, int k);

/// For all SYT T with 2n boxes, P_H e_T != 0 exactly when T is a doubled
/// tableau.
Report verify_doubling(int n);

/// P_H G = P_H sum_lambda c_lambda P_{2 lambda}.
template <CoefficientRing R>
Report verify_orthogonal_spectral(int n, const R& tau);

/// G(tau1) G(tau2) = G(tau2) G(tau1).
Report verify_gram_commutation(int n, const Rational& tau1, const Rational& tau2);

/// P_H x computed through hyperoctahedral_sum_factors.
template <CoefficientRing R>
AlgebraElement<R> average_over_hyperoctahedral(int n, const AlgebraElement<R>& x);

}  // namespace wg
