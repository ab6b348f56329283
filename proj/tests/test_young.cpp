#include "doctest.h"
#include "wg/young.hpp"

using namespace wg;

namespace {

using Elem = AlgebraElement<Rational>;

Partition L(std::initializer_list<int> parts) { return Partition(std::vector<int>(parts)); }

}  // namespace

TEST_CASE("character table of S_3 and S_4") {
  // rows and columns in partitions_of order: [3], [2,1], [1,1,1]
  const std::vector<std::int64_t> s3{1, 1, 1, -1, 0, 2, 1, -1, 1};
  CHECK(CharacterTable::compute(3).values() == s3);
  CHECK(character(L({2, 1}), L({3})) == -1);

  // [4], [3,1], [2,2], [2,1,1], [1,1,1,1]
  const std::vector<std::int64_t> s4{
      1, 1,  1,  1,  1,   //
      -1, 0, -1, 1,  3,   //
      0, -1, 2,  0,  2,   //
      1, 0,  -1, -1, 3,   //
      -1, 1, 1,  -1, 1};
  CHECK(CharacterTable::compute(4).values() == s4);
  CHECK_THROWS_AS(character(L({2, 1}), L({2})), DomainError);
}

TEST_CASE("orthogonality relations and degrees") {
  for (int n = 1; n <= 8; ++n) {
    CAPTURE(n);
    const auto table = CharacterTable::compute(n);
    const auto& parts = table.partitions();
    const std::size_t k = parts.size();
    const Rational order(static_cast<long>(factorial(n)));
    const Partition identity_class(std::vector<int>(static_cast<std::size_t>(n), 1));
    for (std::size_t a = 0; a < k; ++a) {
      CHECK(character(parts[a], identity_class) == static_cast<std::int64_t>(hook_dimension(parts[a])));
      for (std::size_t b = 0; b < k; ++b) {
        Rational rows(0), cols(0);
        for (std::size_t j = 0; j < k; ++j) {
          rows += Rational(table.value(a, j) * table.value(b, j)) / Rational(static_cast<long>(centralizer_size(parts[j])));
          cols += Rational(table.value(j, a) * table.value(j, b));
        }
        CHECK(rows == Rational(a == b ? 1 : 0));
        CHECK(cols == (a == b ? Rational(static_cast<long>(centralizer_size(parts[a]))) : Rational(0)));
      }
    }
  }
}

TEST_CASE("installed tables agree with computed ones") {
  const auto table = CharacterTable::compute(5);
  CharacterTable copy(5, table.partitions(), table.values());
  CHECK(copy == table);
  copy.install();
  CHECK(CharacterTable::compute(5) == table);
  CHECK_THROWS_AS(CharacterTable(5, table.partitions(), {1, 2, 3}), DomainError);
  CHECK_THROWS_AS(CharacterTable(4, table.partitions(), table.values()), DomainError);
}

TEST_CASE("idempotents of two-box tableaux") {
  const auto swap = Permutation::transposition(2, 1, 2);
  Elem row = Elem::basis(Permutation(2), Rational(1, 2));
  row.add_term(swap, Rational(1, 2));
  Elem col = Elem::basis(Permutation(2), Rational(1, 2));
  col.add_term(swap, Rational(-1, 2));
  CHECK(young_idempotent(StandardTableau::parse("[[1,2]]")) == row);
  CHECK(young_idempotent(StandardTableau::parse("[[1],[2]]")) == col);

  Elem trivial3(3);
  for (const auto& s : all_permutations(3)) trivial3.add_term(s, Rational(1, 6));
  CHECK(young_idempotent(StandardTableau::parse("[[1,2,3]]")) == trivial3);
}

TEST_CASE("orthogonal idempotents diagonalize the Jucys-Murphy elements") {
  for (int n = 1; n <= 4; ++n) {
    const auto tableaux = all_standard_tableaux(n);
    const std::size_t deg = static_cast<std::size_t>(n);
    Elem total(deg);
    for (std::size_t a = 0; a < tableaux.size(); ++a) {
      const Elem ea = young_idempotent(tableaux[a]);
      total += ea;
      for (std::size_t b = 0; b < tableaux.size(); ++b) {
        const Elem prod = multiply(ea, young_idempotent(tableaux[b]));
        CHECK(prod == (a == b ? ea : Elem(deg)));
      }
      for (int k = 1; k <= n; ++k) {
        Elem scaled = ea;
        scaled *= Rational(tableaux[a].content(k));
        CHECK(multiply(jm_element<Rational>(k, deg), ea) == scaled);
        CHECK(multiply(ea, jm_element<Rational>(k, deg)) == scaled);
      }
    }
    CHECK(total == Elem::unit(deg));
  }
  Elem total5(5);
  for (const auto& t : all_standard_tableaux(5)) total5 += young_idempotent(t);
  CHECK(total5 == Elem::unit(5));
}

TEST_CASE("central idempotents") {
  for (int n = 1; n <= 5; ++n) {
    const std::size_t deg = static_cast<std::size_t>(n);
    const auto parts = partitions_of(n);
    for (const auto& lambda : parts) {
      const Elem p = central_idempotent(lambda, CentralRoute::character);
      CHECK(p == central_idempotent(lambda, CentralRoute::tableau_sum));
      CHECK(antipode(p) == p);
      if (n <= 4) {
        for (const auto& mu : parts) {
          const Elem q = central_idempotent(mu, CentralRoute::character);
          CHECK(multiply(p, q) == (lambda == mu ? p : Elem(deg)));
        }
        const auto basis = all_permutations(deg);
        CHECK(regular_matrix(p, basis, Side::left).is_symmetric());
        CHECK(regular_matrix(p, basis, Side::left) == regular_matrix(p, basis, Side::right));
      }
    }
  }
}
