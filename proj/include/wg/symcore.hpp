#pragma once

// Enumerative combinatorics used as matrix bases everywhere else:
// partitions, permutations, standard Young tableaux and pair partitions.
// All labels are 1-based at the API boundary.

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "wg/errors.hpp"

namespace wg {

/// Weakly decreasing sequence of positive integers.
class Partition {
 public:
  Partition() = default;
  explicit Partition(std::vector<int> parts);

  const std::vector<int>& parts() const { return parts_; }
  int weight() const { return weight_; }
  std::size_t length() const { return parts_.size(); }
  bool empty() const { return parts_.empty(); }
  int operator[](std::size_t i) const { return parts_[i]; }

  /// Conjugate (transposed) shape.
  Partition conjugate() const;

  std::string str() const;  // "[3,1]"
  static Partition parse(std::string_view text);

  friend bool operator==(const Partition&, const Partition&) = default;
  friend auto operator<=>(const Partition& a, const Partition& b) {
    return a.parts_ <=> b.parts_;
  }

 private:
  std::vector<int> parts_;
  int weight_ = 0;
};

/// Bijection of {1,...,n}. Stored inline; n is capped at kMaxDegree.
class Permutation {
 public:
  static constexpr std::size_t kMaxDegree = 16;

  Permutation() = default;
  /// Identity of S_n.
  explicit Permutation(std::size_t n);

  /// One-line form, 1-based images. Throws DomainError if not a bijection.
  static Permutation from_images(std::span<const int> images);
  static Permutation from_images(std::initializer_list<int> images) {
    return from_images(std::span<const int>(images.begin(), images.size()));
  }
  /// The transposition (i j) in S_n, 1-based, i != j.
  static Permutation transposition(std::size_t n, int i, int j);

  std::size_t size() const { return size_; }

  /// sigma(k), 1-based.
  int operator()(int k) const { return img_[static_cast<std::size_t>(k - 1)] + 1; }
  /// 0-based image of 0-based point.
  std::uint8_t at0(std::size_t i) const { return img_[i]; }

  std::vector<int> images() const;
  bool is_identity() const;

  Permutation inverse() const;
  /// Same permutation regarded as an element of S_m, m >= size(); fixes m+1..
  Permutation embed(std::size_t m) const;

  Partition cycle_type() const;
  int num_cycles() const;
  /// +1 or -1.
  int sign() const;

  std::string str() const;  // "[2,1,3]"
  static Permutation parse(std::string_view text);

  std::size_t hash() const;

  friend bool operator==(const Permutation& a, const Permutation& b) {
    return a.size_ == b.size_ && a.img_ == b.img_;
  }
  // Lexicographic on one-line form, shorter degree first.
  friend std::strong_ordering operator<=>(const Permutation& a, const Permutation& b) {
    if (auto c = a.size_ <=> b.size_; c != 0) return c;
    return a.img_ <=> b.img_;
  }

  friend Permutation compose(const Permutation& outer, const Permutation& inner);

 private:
  std::array<std::uint8_t, kMaxDegree> img_{};
  std::uint8_t size_ = 0;
};

/// (outer o inner)(i) = outer(inner(i)). Throws DomainError on size mismatch.
Permutation compose(const Permutation& outer, const Permutation& inner);

/// Conjugation g x g^{-1}.
Permutation conjugate(const Permutation& g, const Permutation& x);

/// All of S_n in lexicographic order of one-line form.
std::vector<Permutation> all_permutations(std::size_t n);

/// Rank of sigma in the lexicographic order of S_n.
std::size_t permutation_rank(const Permutation& sigma);

/// Standard Young tableau stored as rows.
class StandardTableau {
 public:
  StandardTableau() = default;
  /// Validates that rows form a partition shape filled by 1..n increasing
  /// along rows and columns.
  explicit StandardTableau(std::vector<std::vector<int>> rows);

  const std::vector<std::vector<int>>& rows() const { return rows_; }
  const Partition& shape() const { return shape_; }
  int size() const { return shape_.weight(); }

  /// 1-based (row, column) of the box holding k.
  std::pair<int, int> position(int k) const;
  /// Column minus row of the box holding k.
  int content(int k) const;

  /// The tableau with the box holding n removed. Requires size() >= 2.
  StandardTableau without_last() const;
  /// Row-by-row reading word.
  std::vector<int> reading_word() const;

  std::string str() const;  // "[[1,2],[3]]"
  static StandardTableau parse(std::string_view text);

  friend bool operator==(const StandardTableau& a, const StandardTableau& b) {
    return a.rows_ == b.rows_;
  }
  friend auto operator<=>(const StandardTableau& a, const StandardTableau& b) {
    return a.rows_ <=> b.rows_;
  }

 private:
  std::vector<std::vector<int>> rows_;
  Partition shape_;
};

/// Fixed-point-free involution of {1,...,2n}.
class Pairing {
 public:
  Pairing() = default;
  /// From a list of pairs covering 1..2n exactly once.
  static Pairing from_pairs(const std::vector<std::pair<int, int>>& pairs);
  /// From a permutation that must be a fixed-point-free involution.
  static Pairing from_permutation(const Permutation& p);

  /// Number of points, 2n.
  std::size_t points() const { return involution_.size(); }
  /// n.
  std::size_t blocks() const { return involution_.size() / 2; }

  /// Partner of k, 1-based.
  int partner(int k) const { return involution_(k); }
  const Permutation& as_permutation() const { return involution_; }

  /// Canonical pair list: (a,b), a<b, sorted by a.
  std::vector<std::pair<int, int>> pairs() const;

  std::string str() const;  // "(1,2)(3,5)(4,6)"
  static Pairing parse(std::string_view text);

  friend bool operator==(const Pairing& a, const Pairing& b) = default;
  friend auto operator<=>(const Pairing& a, const Pairing& b) {
    return a.pairs() <=> b.pairs();
  }

 private:
  explicit Pairing(Permutation p) : involution_(p) {}
  Permutation involution_;
};

/// Partitions of n in reverse-lexicographic order: (n), (n-1,1), ...
std::vector<Partition> partitions_of(int n);

/// All SYT of the given shape, ordered lexicographically by reading word.
std::vector<StandardTableau> standard_tableaux(const Partition& shape);

/// All SYT with n boxes: shapes in partitions_of order, tableaux per shape
/// in standard_tableaux order.
std::vector<StandardTableau> all_standard_tableaux(int n);

/// Number of SYT of shape lambda via the hook length formula.
std::uint64_t hook_dimension(const Partition& lambda);

/// (2n-1)!! pairings of {1,...,2n}, lexicographic on canonical pair lists.
std::vector<Pairing> enumerate_pairings(int n);

/// Half the number of cycles of the product of two pairings.
int loop_count(const Pairing& a, const Pairing& b);

/// Each part doubled.
Partition double_shape(const Partition& lambda);
/// Box k becomes the adjacent boxes 2k-1, 2k in the same row.
StandardTableau double_tableau(const StandardTableau& t);

/// n!
std::uint64_t factorial(int n);
/// (2n-1)!!
std::uint64_t double_factorial_odd(int n);

}  // namespace wg

template <>
struct std::hash<wg::Permutation> {
  std::size_t operator()(const wg::Permutation& p) const noexcept { return p.hash(); }
};
