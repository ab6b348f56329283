#pragma once

// Monte-Carlo estimation of Haar moments on U(tau) and O(tau), checked
// against exact Weingarten predictions. The only floating-point module.
//
// Sampling: a tau x tau Ginibre matrix (iid standard normal entries, complex
// with variance 1/2 per component for the unitary group) is factored G = QR by
// Householder QR and the columns of Q are rescaled by R_ii / |R_ii|, which
// makes the result exactly Haar distributed.
//
// Seeding: samples are split into 64 fixed chunks. Chunk c draws from an
// mt19937_64 seeded with splitmix64(seed + 0x9e3779b97f4a7c15 * (c + 1)), and
// chunk statistics are merged in a fixed pairwise tree, so results do not
// depend on the number of worker threads.

#include <complex>
#include <cstdint>
#include <map>
#include <random>
#include <string>
#include <tuple>
#include <vector>

#include <Eigen/Dense>

#include "wg/coeffring.hpp"
#include "wg/matrix.hpp"
#include "wg/symcore.hpp"

namespace wg {

enum class Group { unitary, orthogonal };

std::string group_name(Group g);
Group parse_group(const std::string& name);

/// Index tuples of a moment, 1-based.
///   unitary:    E[ prod_k U_{i_k j_k} prod_k conj(U_{i'_k j'_k}) ]
///   orthogonal: E[ prod_k O_{i_k j_k} ]        (i_conj, j_conj unused)
struct MomentIndices {
  std::vector<int> i, j, i_conj, j_conj;

  std::string str() const;  // "1,2;1,2;1,1;2,2"
  static MomentIndices parse(const std::string& text, Group group);
  friend auto operator<=>(const MomentIndices&, const MomentIndices&) = default;
};

struct MomentSpec {
  Group group = Group::unitary;
  int tau = 1;
  MomentIndices indices;
  std::uint64_t samples = 0;
  std::uint64_t seed = 0;
};

struct MomentReport {
  MomentSpec spec;
  double estimate = 0;  // real part
  double stderr_ = 0;
  Rational exact;
  double z = 0;
  // Imaginary part; its expectation is 0 since every prediction is real.
  // Always zero for the orthogonal group.
  double estimate_imag = 0;
  double stderr_imag = 0;
  double z_imag = 0;

  /// Largest |z| over the real and imaginary parts.
  double max_abs_z() const;
};

/// Two-sided normal tail P(|Z| > threshold).
double normal_tail(double threshold);

/// One Haar sample; orthogonal samples have zero imaginary part.
Eigen::MatrixXcd sample_haar(Group group, int tau, std::uint64_t seed);
Eigen::MatrixXcd sample_unitary(int tau, std::mt19937_64& rng);
Eigen::MatrixXd sample_orthogonal(int tau, std::mt19937_64& rng);

/// max |(M^* M - I)_{ab}|.
double unitarity_defect(const Eigen::MatrixXcd& m);

/// Exact moments. Tables are computed once per (group, n, tau) and reused.
class MomentPredictor {
 public:
  Rational predict(Group group, int tau, const MomentIndices& idx);

 private:
  std::map<std::pair<int, int>, std::map<Partition, Rational>> unitary_;
  std::map<std::pair<int, int>, std::pair<std::vector<Pairing>, Matrix<Rational>>> orthogonal_;
};

Rational predict_moment(const MomentSpec& spec);

/// Validates indices against the group and tau; throws DomainError.
void validate_moment(Group group, int tau, const MomentIndices& idx);

/// All moments share one stream of samples. threads = 0 picks the hardware
/// concurrency; the result does not depend on it.
std::vector<MomentReport> estimate_moments(Group group, int tau, const std::vector<MomentIndices>& moments,
                                           std::uint64_t samples, std::uint64_t seed, unsigned threads = 0);

MomentReport estimate_moment(const MomentSpec& spec, unsigned threads = 0);

/// Degree-n moments up to reordering of factors: unitary takes multisets of
/// n entry positions for the plain and for the conjugated factors; orthogonal
/// takes multisets of 2n entry positions. Reordering factors does not change a
/// moment, so these cover the full index grid.
std::vector<MomentIndices> moment_grid(Group group, int tau, int n);

}  // namespace wg
