#include <cmath>

#include "doctest.h"
#include "oracles.hpp"
#include "wg/haar_mc.hpp"
#include "wg/wg_unitary.hpp"

using namespace wg;

namespace {

MomentIndices U(std::vector<int> i, std::vector<int> j, std::vector<int> ic, std::vector<int> jc) {
  return {std::move(i), std::move(j), std::move(ic), std::move(jc)};
}
MomentIndices O(std::vector<int> i, std::vector<int> j) { return {std::move(i), std::move(j), {}, {}}; }

// Brute-force unitary moment: sum over pairs of permutations of the
// index-matching deltas times entries of the inverted Gram matrix.
Rational brute_unitary(int tau, const MomentIndices& m) {
  const std::size_t n = m.i.size();
  if (m.i_conj.size() != n) return Rational(0);
  const auto basis = all_permutations(n);
  const auto inverse = *oracle::invert(gram_unitary(static_cast<int>(n), Rational(tau)));
  Rational total(0);
  for (std::size_t a = 0; a < basis.size(); ++a) {
    for (std::size_t b = 0; b < basis.size(); ++b) {
      const auto& s = basis[a];
      const auto& r = basis[b];
      bool ok = true;
      for (int k = 1; k <= static_cast<int>(n); ++k) {
        ok = ok && m.i[static_cast<std::size_t>(k - 1)] == m.i_conj[static_cast<std::size_t>(s(k) - 1)];
        ok = ok && m.j[static_cast<std::size_t>(k - 1)] == m.j_conj[static_cast<std::size_t>(r(k) - 1)];
      }
      if (ok) total += inverse(a, b);
    }
  }
  return total;
}

}  // namespace

TEST_CASE("samples are unitary or orthogonal") {
  for (int tau : {1, 2, 3, 5}) {
    for (std::uint64_t seed = 0; seed < 5; ++seed) {
      CHECK(unitarity_defect(sample_haar(Group::unitary, tau, seed)) < 1e-12);
      const auto o = sample_haar(Group::orthogonal, tau, seed);
      CHECK(unitarity_defect(o) < 1e-12);
      CHECK(o.imag().cwiseAbs().maxCoeff() == 0.0);
    }
  }
  CHECK_THROWS_AS(sample_haar(Group::unitary, 0, 1), DomainError);
}

TEST_CASE("one-dimensional orthogonal group is a fair sign") {
  int plus = 0;
  const int trials = 4000;
  for (int s = 0; s < trials; ++s) {
    const double v = sample_haar(Group::orthogonal, 1, static_cast<std::uint64_t>(s))(0, 0).real();
    CHECK(std::abs(std::abs(v) - 1.0) < 1e-15);
    if (v > 0) ++plus;
  }
  // binomial(4000, 1/2): sd = sqrt(1000) ~ 31.6
  CHECK(std::abs(plus - trials / 2) < 4 * 32);
}

TEST_CASE("exact predictions") {
  MomentPredictor p;
  CHECK(p.predict(Group::unitary, 3, U({1}, {1}, {1}, {1})) == Rational(1, 3));
  CHECK(p.predict(Group::orthogonal, 4, O({1, 1}, {1, 1})) == Rational(1, 4));
  // |U11|^2 |U22|^2 and |U11|^2 |U12|^2 at tau = 3
  CHECK(p.predict(Group::unitary, 3, U({1, 2}, {1, 2}, {1, 2}, {1, 2})) == Rational(1, 8));
  CHECK(p.predict(Group::unitary, 3, U({1, 1}, {1, 2}, {1, 1}, {1, 2})) == Rational(1, 12));
  // |U11|^4 = 2 / (tau (tau + 1))
  CHECK(p.predict(Group::unitary, 3, U({1, 1}, {1, 1}, {1, 1}, {1, 1})) == Rational(1, 6));
  // O11^4 = 3 / (tau (tau + 2))
  CHECK(p.predict(Group::orthogonal, 4, O({1, 1, 1, 1}, {1, 1, 1, 1})) == Rational(1, 8));
  // unbalanced and odd moments vanish
  CHECK(p.predict(Group::unitary, 3, U({1, 1}, {1, 1}, {1}, {1})).is_zero());
  CHECK(p.predict(Group::orthogonal, 4, O({1, 2, 1}, {1, 1, 2})).is_zero());
  CHECK(p.predict(Group::unitary, 3, U({}, {}, {}, {})) == Rational(1));
  CHECK_THROWS_AS(p.predict(Group::unitary, 3, U({4}, {1}, {1}, {1})), DomainError);
  CHECK_THROWS_AS(p.predict(Group::unitary, 3, U({1, 2}, {1}, {1}, {1})), DomainError);

  for (const auto& m : moment_grid(Group::unitary, 2, 2)) CHECK(p.predict(Group::unitary, 2, m) == brute_unitary(2, m));
  int checked = 0;
  for (const auto& m : moment_grid(Group::unitary, 3, 3)) {
    if (++checked % 97 != 0) continue;
    CHECK(p.predict(Group::unitary, 3, m) == brute_unitary(3, m));
  }
}

TEST_CASE("orthogonal predictions sum to the row-norm identity") {
  // sum_j O_{1j}^2 = 1, so sum_j E[O_{1j}^2 O_{11}^2] = E[O_{11}^2] = 1/tau.
  MomentPredictor p;
  for (int tau : {2, 3, 4}) {
    Rational sum(0);
    for (int j = 1; j <= tau; ++j) sum += p.predict(Group::orthogonal, tau, O({1, 1, 1, 1}, {j, j, 1, 1}));
    CHECK(sum == Rational(1, tau));
  }
  for (int tau : {2, 3}) {
    Rational sum(0);
    for (int j = 1; j <= tau; ++j) sum += p.predict(Group::unitary, tau, U({1, 1}, {j, 1}, {1, 1}, {j, 1}));
    CHECK(sum == Rational(1, tau));
  }
}

TEST_CASE("moment grid sizes") {
  CHECK(moment_grid(Group::unitary, 3, 2).size() == 45 * 45);
  CHECK(moment_grid(Group::orthogonal, 4, 2).size() == 3876);
  CHECK(moment_grid(Group::unitary, 2, 1).size() == 16);
}

TEST_CASE("index parsing") {
  const auto m = MomentIndices::parse("1,2;1,2;2,1;2,1", Group::unitary);
  CHECK(m.i == std::vector<int>{1, 2});
  CHECK(m.j_conj == std::vector<int>{2, 1});
  CHECK(m.str() == "1,2;1,2;2,1;2,1");
  CHECK(MomentIndices::parse("1,1;2,2", Group::orthogonal).j == std::vector<int>{2, 2});
  CHECK_THROWS_AS(MomentIndices::parse("1,2;1", Group::unitary), DomainError);
  CHECK_THROWS_AS(MomentIndices::parse("1,x;1,2", Group::orthogonal), DomainError);
}

TEST_CASE("estimates are deterministic and independent of thread count") {
  const auto grid = moment_grid(Group::unitary, 2, 1);
  const auto a = estimate_moments(Group::unitary, 2, grid, 5000, 42, 1);
  const auto b = estimate_moments(Group::unitary, 2, grid, 5000, 42, 7);
  const auto c = estimate_moments(Group::unitary, 2, grid, 5000, 43, 4);
  REQUIRE(a.size() == b.size());
  bool differs = false;
  for (std::size_t k = 0; k < a.size(); ++k) {
    CHECK(a[k].estimate == b[k].estimate);
    CHECK(a[k].stderr_ == b[k].stderr_);
    CHECK(a[k].estimate_imag == b[k].estimate_imag);
    differs = differs || a[k].estimate != c[k].estimate;
  }
  CHECK(differs);
  CHECK_THROWS_AS(estimate_moments(Group::unitary, 2, grid, 50, 1), DomainError);
}

TEST_CASE("first moment of |U11|^2") {
  const MomentSpec spec{Group::unitary, 3, U({1}, {1}, {1}, {1}), 100000, 7};
  const auto r = estimate_moment(spec);
  CHECK(r.exact == Rational(1, 3));
  CHECK(r.stderr_ > 0);
  CHECK(std::abs(r.z) <= 4);
  CHECK(std::abs(r.estimate - 1.0 / 3) <= 4 * r.stderr_);
}

TEST_CASE("left translation invariance") {
  // Entries of V U for a fixed unitary V have the same moments as those of U.
  const int tau = 3;
  const auto v = sample_haar(Group::unitary, tau, 999);
  std::mt19937_64 rng(5);
  const int samples = 40000;
  double sum = 0, sum_sq = 0;
  for (int s = 0; s < samples; ++s) {
    const Eigen::MatrixXcd w = v * sample_unitary(tau, rng);
    const double x = std::pow(std::abs(w(0, 0)), 4);
    sum += x;
    sum_sq += x * x;
  }
  const double mean = sum / samples;
  const double se = std::sqrt((sum_sq / samples - mean * mean) / (samples - 1));
  CHECK(std::abs(mean - 1.0 / 6) <= 4 * se);
}

TEST_CASE("normal tail") {
  CHECK(std::abs(normal_tail(4.0) - 6.334e-5) < 1e-7);
  CHECK(std::abs(normal_tail(0.0) - 1.0) < 1e-15);
}
