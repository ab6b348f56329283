#include <set>

#include "doctest.h"
#include "oracles.hpp"
#include "wg/wg_orthogonal.hpp"

using namespace wg;

namespace {

const TauRational tau = TauRational::tau();

Partition L(std::initializer_list<int> parts) { return Partition(std::vector<int>(parts)); }
TauRational T(const char* text) { return TauRational::parse(text); }
Pairing PP(const char* text) { return Pairing::parse(text); }

// Loops of the graph on 2n points whose edges are the pairs of both pairings,
// counted by walking alternately along pi and pi'.
int walk_loops(const Pairing& pi, const Pairing& pi_prime) {
  const int m = static_cast<int>(pi.points());
  std::vector<bool> seen(static_cast<std::size_t>(m + 1), false);
  int loops = 0;
  for (int start = 1; start <= m; ++start) {
    if (seen[static_cast<std::size_t>(start)]) continue;
    ++loops;
    int p = start;
    do {
      seen[static_cast<std::size_t>(p)] = true;
      int q = pi.partner(p);
      seen[static_cast<std::size_t>(q)] = true;
      p = pi_prime.partner(q);
    } while (p != start);
  }
  return loops;
}

template <class R>
Matrix<R> projector_matrix(const Partition& lambda) {
  const auto basis = enumerate_pairings(lambda.weight());
  Matrix<R> p(basis.size(), basis.size());
  for (std::size_t a = 0; a < basis.size(); ++a)
    for (std::size_t b = 0; b < basis.size(); ++b) p(a, b) = R(projector_entry(lambda, basis[a], basis[b]));
  return p;
}

}  // namespace

TEST_CASE("beta and coset representatives") {
  CHECK(beta(1).str() == "(1,2)");
  CHECK(beta(3).str() == "(1,2)(3,4)(5,6)");
  CHECK_THROWS_AS(beta(0), DomainError);

  CHECK(coset_representative(PP("(1,2)(3,4)")).sigma == Permutation(4));
  CHECK(coset_representative(PP("(1,3)(2,4)")).sigma == Permutation::from_images({1, 3, 2, 4}));
  CHECK(coset_representative(PP("(1,4)(2,3)")).sigma == Permutation::from_images({3, 2, 1, 4}));

  for (int n = 1; n <= 5; ++n) {
    const auto b = beta(n).as_permutation();
    std::set<Permutation> reps;
    std::set<std::vector<Permutation>> cosets;
    const auto h = hyperoctahedral_elements(n);
    for (const auto& pi : enumerate_pairings(n)) {
      const auto rep = coset_representative(pi);
      CHECK(rep.pairing == pi);
      CHECK(conjugate(rep.sigma, b) == pi.as_permutation());
      reps.insert(rep.sigma);
      if (n <= 3) {
        std::vector<Permutation> coset;
        for (const auto& x : h) coset.push_back(compose(rep.sigma, x));
        std::sort(coset.begin(), coset.end());
        cosets.insert(coset);
      }
    }
    CHECK(reps.size() == double_factorial_odd(n));
    if (n <= 3) CHECK(cosets.size() == double_factorial_odd(n));
  }
}

TEST_CASE("centralizers and matching conjugators") {
  for (int n = 1; n <= 3; ++n) {
    for (const auto& pi : enumerate_pairings(n)) {
      const auto c = centralizer(pi);
      CHECK(c.size() == (std::uint64_t{1} << n) * factorial(n));
      for (const auto& g : c) CHECK(conjugate(g, pi.as_permutation()) == pi.as_permutation());
      for (const auto& other : enumerate_pairings(n))
        CHECK(conjugate(matching_conjugator(pi, other), pi.as_permutation()) == other.as_permutation());
    }
  }
  const auto b = beta(2);
  CHECK(coset_type(b, b) == L({1, 1}));
  CHECK(coset_type(b, PP("(1,3)(2,4)")) == L({2}));
}

TEST_CASE("orthogonal content products and exclusions") {
  CHECK(c_orthogonal(L({1}), tau) == tau);
  CHECK(c_orthogonal(L({2}), tau) == T("t^2 + 2*t"));
  CHECK(c_orthogonal(L({1, 1}), tau) == T("t^2 - t"));
  CHECK(c_orthogonal(L({2, 1}), tau) == T("t^3 + t^2 - 2*t"));
  CHECK(excluded_orthogonal(2, Rational(1)) == std::vector<Partition>{L({1, 1})});
  CHECK(excluded_orthogonal(3, Rational(2)) == std::vector<Partition>{L({1, 1, 1})});
  CHECK(excluded_orthogonal(3, tau).empty());
}

TEST_CASE("orthogonal Gram matrix") {
  CHECK(enumerate_pairings(4).size() == 105);
  const auto g2 = gram_orthogonal(2, tau);
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) CHECK(g2(i, j) == (i == j ? tau * tau : tau));
  CHECK(loop_count(PP("(1,2)(3,5)(4,6)"), PP("(1,3)(2,4)(5,6)")) == 1);
  for (int n = 1; n <= 4; ++n) {
    const auto basis = enumerate_pairings(n);
    const auto g = gram_orthogonal(n, Rational(3));
    for (std::size_t a = 0; a < basis.size(); ++a)
      for (std::size_t b = 0; b < basis.size(); ++b)
        CHECK(g(a, b) == power(Rational(3), walk_loops(basis[a], basis[b])));
  }
}

TEST_CASE("projector entries") {
  CHECK(projector_entry(L({1}), beta(1), beta(1)) == Rational(1));
  for (int n = 1; n <= 3; ++n) {
    const auto basis = enumerate_pairings(n);
    Matrix<Rational> total(basis.size(), basis.size());
    for (const auto& lambda : partitions_of(n)) {
      const auto p = projector_matrix<Rational>(lambda);
      CHECK(p.is_symmetric());
      CHECK(p * p == p);
      for (std::size_t a = 0; a < basis.size(); ++a)
        for (std::size_t b = 0; b < basis.size(); ++b) total(a, b) += p(a, b);
    }
    CHECK(total == Matrix<Rational>::identity(basis.size()));
  }
  // a different conjugator for the same pair of pairings gives the same entry
  for (const auto& pi : enumerate_pairings(2)) {
    for (const auto& pj : enumerate_pairings(2)) {
      const auto s0 = compose(coset_representative(pi).sigma, coset_representative(pj).sigma.inverse());
      for (const auto& lambda : partitions_of(2))
        CHECK(projector_entry(lambda, pi, pj, s0) == projector_entry(lambda, pi, pj));
    }
  }
  CHECK_THROWS_AS(projector_entry(L({1}), beta(2), beta(2)), DomainError);
  CHECK_THROWS_AS(coset_class_histogram(beta(2), beta(2), Permutation::transposition(4, 2, 3)), DomainError);
}

TEST_CASE("symbolic orthogonal Weingarten matrix") {
  const auto t2 = weingarten_orthogonal(2, tau);
  const TauRational diag = T("(t + 1)/(t^3 + t^2 - 2*t)");
  const TauRational off = T("(-1)/(t^3 + t^2 - 2*t)");
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) CHECK(t2.weingarten(i, j) == (i == j ? diag : off));
  CHECK(t2.weingarten(0, 1).str() == "(-1)/(t^3 + t^2 - 2*t)");

  for (int n = 1; n <= 3; ++n) {
    CAPTURE(n);
    const auto table = weingarten_orthogonal(n, tau);
    const auto inverse = oracle::invert(table.gram);
    REQUIRE(inverse.has_value());
    CHECK(table.weingarten == *inverse);
    CHECK(is_left_inverse(table.weingarten, table.gram));
  }
}

TEST_CASE("numeric orthogonal Weingarten matrix") {
  const auto t4 = weingarten_orthogonal(4, Rational(7));
  CHECK(t4.weingarten == *oracle::invert(t4.gram));
  const auto t3 = weingarten_orthogonal(3, Rational(5, 2));
  CHECK(t3.weingarten == *oracle::invert(t3.gram));

  const auto singular = weingarten_orthogonal(2, Rational(1));
  CHECK(singular.excluded == std::vector<Partition>{L({1, 1})});
  CHECK_FALSE(oracle::invert(singular.gram).has_value());
  CHECK(pseudo_inverse_check(singular.gram, singular.weingarten).passed());
  // only [2] survives, and P_[4] has rank 1 on the pairing space
  CHECK(oracle::trace(singular.weingarten * singular.gram) == Rational(1));
  const auto s3 = weingarten_orthogonal(3, Rational(2));
  CHECK(pseudo_inverse_check(s3.gram, s3.weingarten).passed());
}

TEST_CASE("memoized entries agree with direct projector sums") {
  for (int n = 1; n <= 3; ++n) {
    const Rational t(9);
    const auto table = weingarten_orthogonal(n, t);
    for (std::size_t a = 0; a < table.basis.size(); ++a) {
      for (std::size_t b = 0; b < table.basis.size(); ++b) {
        Rational direct(0);
        for (const auto& lambda : partitions_of(n))
          direct += projector_entry(lambda, table.basis[a], table.basis[b]) / c_orthogonal(lambda, t);
        CHECK(table.weingarten(a, b) == direct);
      }
    }
  }
}

TEST_CASE("Young-module route agrees") {
  for (int n = 1; n <= 3; ++n) {
    CHECK(weingarten_orthogonal_by_idempotents(n, tau) == weingarten_orthogonal(n, tau).weingarten);
    CHECK(weingarten_orthogonal_by_idempotents(n, Rational(1)) == weingarten_orthogonal(n, Rational(1)).weingarten);
  }
}

TEST_CASE("exact orthogonal identity checks") {
  for (int n = 1; n <= 4; ++n) {
    CHECK(verify_oid(n, tau).passed());
    CHECK(verify_gram_commutation(n, Rational(3), Rational(7)).passed());
  }
  for (int n = 1; n <= 3; ++n) {
    CHECK(verify_stability_lemma(n, tau).passed());
    CHECK(verify_orthogonal_spectral(n, tau).passed());
    CHECK(verify_doubling(n).passed());
    for (int k = 1; k <= n; ++k) CHECK(verify_key_identity(n, k).passed());
  }
  CHECK_THROWS_AS(verify_key_identity(2, 3), DomainError);
}

TEST_CASE("averaging through the factored sum") {
  for (int n = 1; n <= 3; ++n) {
    const auto x = AlgebraElement<Rational>::basis(Permutation::transposition(static_cast<std::size_t>(2 * n), 1, 2 * n));
    CHECK(average_over_hyperoctahedral(n, x) == multiply(average_projector<Rational>(n), x));
  }
}
