#pragma once

// Irreducible characters of S_n, Young's orthogonal idempotents e_T and the
// central idempotents P_lambda.

#include <cstdint>
#include <vector>

#include "wg/groupalg.hpp"
#include "wg/report.hpp"
#include "wg/symcore.hpp"

namespace wg {

/// chi_lambda evaluated on the class of cycle type mu (Murnaghan-Nakayama).
/// Memoized process-wide; safe to call concurrently.
/// Throws DomainError if |lambda| != |mu|.
std::int64_t character(const Partition& lambda, const Partition& mu);

/// Full character table of S_n, rows lambda and columns mu both in
/// partitions_of(n) order.
class CharacterTable {
 public:
  CharacterTable() = default;
  /// Validating constructor used when loading from a cache file.
  CharacterTable(int n, std::vector<Partition> partitions, std::vector<std::int64_t> values);

  static CharacterTable compute(int n);

  int n() const { return n_; }
  const std::vector<Partition>& partitions() const { return partitions_; }
  /// Row-major, lambda rows by mu columns.
  const std::vector<std::int64_t>& values() const { return values_; }
  std::int64_t value(std::size_t lambda_index, std::size_t mu_index) const {
    return values_[lambda_index * partitions_.size() + mu_index];
  }

  /// Seeds the process-wide character memo with this table's values.
  void install() const;

  friend bool operator==(const CharacterTable&, const CharacterTable&) = default;

 private:
  int n_ = 0;
  std::vector<Partition> partitions_;
  std::vector<std::int64_t> values_;
};

/// Size of the centralizer of a permutation of cycle type mu.
std::uint64_t centralizer_size(const Partition& mu);

/// Young's orthogonal idempotent, built by the Lagrange-interpolation
/// recursion in the Jucys-Murphy element m_n:
///   e_T = e_{T-bar} * prod_{T' != T, T'-bar = T-bar} (m_n - c(T'_n)) / (c(T_n) - c(T'_n)).
/// Results for tableaux with at most 7 boxes are memoized.
AlgebraElement<Rational> young_idempotent(const StandardTableau& t);

enum class CentralRoute { tableau_sum, character };

/// P_lambda either as sum of e_T over SYT(lambda), or by the character
/// formula (chi_lambda(1)/n!) sum_sigma chi_lambda(sigma^{-1}) sigma.
AlgebraElement<Rational> central_idempotent(const Partition& lambda, CentralRoute route);

/// For all SYT with n boxes: e_T e_T' = delta e_T, m_k e_T = c_T(k) e_T for
/// every k, and sum_T e_T = 1.
Report verify_idempotents(int n);

/// For all lambda of n: both P_lambda routes agree and P_lambda P_mu = delta P_lambda.
Report verify_central(int n);

}  // namespace wg
