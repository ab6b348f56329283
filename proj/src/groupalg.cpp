#include "wg/groupalg.hpp"

#include <algorithm>
#include <deque>
#include <set>

namespace wg {

std::vector<RawTerm> expand_jm_product_raw(const std::vector<int>& ks, std::size_t n) {
  std::vector<RawTerm> terms{{Permutation(n), 0}};
  for (int k : ks) {
    if (k < 1 || static_cast<std::size_t>(k) > n) throw DomainError("jm factor index out of range");
    std::vector<RawTerm> next;
    next.reserve(terms.size() * static_cast<std::size_t>(k));
    for (const auto& t : terms) {
      next.push_back({t.perm, t.tau_power + 1});
      for (int i = 1; i < k; ++i)
        next.push_back({compose(t.perm, Permutation::transposition(n, i, k)), t.tau_power});
    }
    terms = std::move(next);
  }
  return terms;
}

namespace {

Permutation adjacent_pairing(int n) {
  std::vector<int> img(static_cast<std::size_t>(2 * n));
  for (int i = 0; i < n; ++i) {
    img[static_cast<std::size_t>(2 * i)] = 2 * i + 2;
    img[static_cast<std::size_t>(2 * i + 1)] = 2 * i + 1;
  }
  return Permutation::from_images(img);
}

Permutation block_transposition(int n, int i, int j) {
  const std::size_t m = static_cast<std::size_t>(2 * n);
  return compose(Permutation::transposition(m, 2 * i - 1, 2 * j - 1),
                 Permutation::transposition(m, 2 * i, 2 * j));
}

}  // namespace

std::vector<Permutation> hyperoctahedral_elements(int n) {
  if (n < 1) throw DomainError("hyperoctahedral group needs n >= 1");
  const std::size_t m = static_cast<std::size_t>(2 * n);
  std::vector<Permutation> gens;
  for (int i = 1; i <= n; ++i) gens.push_back(Permutation::transposition(m, 2 * i - 1, 2 * i));
  for (int i = 1; i < n; ++i) gens.push_back(block_transposition(n, i, i + 1));

  std::set<Permutation> seen{Permutation(m)};
  std::deque<Permutation> todo{Permutation(m)};
  while (!todo.empty()) {
    Permutation cur = todo.front();
    todo.pop_front();
    for (const auto& g : gens) {
      Permutation next = compose(cur, g);
      if (seen.insert(next).second) todo.push_back(next);
    }
  }
  return {seen.begin(), seen.end()};
}

std::vector<Permutation> hyperoctahedral_by_stabilizer(int n) {
  const Permutation beta = adjacent_pairing(n);
  std::vector<Permutation> out;
  for (const auto& s : all_permutations(static_cast<std::size_t>(2 * n)))
    if (conjugate(s, beta) == beta) out.push_back(s);
  return out;
}

std::vector<AlgebraElement<Rational>> hyperoctahedral_sum_factors(int n) {
  if (n < 1) throw DomainError("hyperoctahedral group needs n >= 1");
  const std::size_t m = static_cast<std::size_t>(2 * n);
  std::vector<AlgebraElement<Rational>> factors;
  for (int i = 1; i <= n; ++i) {
    auto f = AlgebraElement<Rational>::unit(m);
    f.add_term(Permutation::transposition(m, 2 * i - 1, 2 * i), Rational(1));
    factors.push_back(std::move(f));
  }
  // Block analogue of (1 + m_2)(1 + m_3)...(1 + m_n) = sum over S_n.
  for (int k = 2; k <= n; ++k) {
    auto f = AlgebraElement<Rational>::unit(m);
    for (int i = 1; i < k; ++i) f.add_term(block_transposition(n, i, k), Rational(1));
    factors.push_back(std::move(f));
  }
  return factors;
}

}  // namespace wg
