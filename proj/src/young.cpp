#include "wg/young.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <shared_mutex>

namespace wg {

namespace {

using Parts = std::vector<int>;

struct CharacterMemo {
  std::shared_mutex mutex;
  std::map<std::pair<Parts, Parts>, std::int64_t> values;
};

CharacterMemo& character_memo() {
  static CharacterMemo memo;
  return memo;
}

// Murnaghan-Nakayama on beta-sets: removing a rim hook of length r moves one
// bead from b to b - r; the sign counts beads jumped over.
std::int64_t murnaghan_nakayama(const Parts& lambda, const Parts& mu) {
  if (mu.empty()) return lambda.empty() ? 1 : 0;
  auto& memo = character_memo();
  const auto key = std::make_pair(lambda, mu);
  {
    std::shared_lock lock(memo.mutex);
    if (auto it = memo.values.find(key); it != memo.values.end()) return it->second;
  }

  const int r = mu.front();
  const Parts rest(mu.begin() + 1, mu.end());
  const int len = static_cast<int>(lambda.size());
  std::vector<int> beta(lambda.size());
  for (int i = 0; i < len; ++i) beta[static_cast<std::size_t>(i)] = lambda[static_cast<std::size_t>(i)] + (len - 1 - i);

  std::int64_t total = 0;
  for (std::size_t i = 0; i < beta.size(); ++i) {
    const int target = beta[i] - r;
    if (target < 0 || std::find(beta.begin(), beta.end(), target) != beta.end()) continue;
    int jumped = 0;
    for (int b : beta)
      if (b > target && b < beta[i]) ++jumped;
    std::vector<int> moved = beta;
    moved[i] = target;
    std::sort(moved.begin(), moved.end(), std::greater<>());
    Parts smaller;
    for (int k = 0; k < len; ++k) {
      int part = moved[static_cast<std::size_t>(k)] - (len - 1 - k);
      if (part > 0) smaller.push_back(part);
    }
    const std::int64_t sub = murnaghan_nakayama(smaller, rest);
    total += (jumped % 2 == 0) ? sub : -sub;
  }

  std::unique_lock lock(memo.mutex);
  memo.values.emplace(key, total);
  return total;
}

struct IdempotentMemo {
  std::mutex mutex;
  std::map<StandardTableau, AlgebraElement<Rational>> values;
};

IdempotentMemo& idempotent_memo() {
  static IdempotentMemo memo;
  return memo;
}

constexpr int kMemoizedTableauSize = 7;

// Contents of the addable corners of a shape given as row lengths.
std::vector<int> addable_contents(const std::vector<int>& rows) {
  std::vector<int> out;
  for (std::size_t i = 0; i < rows.size(); ++i)
    if (i == 0 || rows[i - 1] > rows[i]) out.push_back(rows[i] - static_cast<int>(i));
  out.push_back(-static_cast<int>(rows.size()));
  return out;
}

AlgebraElement<Rational> build_idempotent(const StandardTableau& t);

AlgebraElement<Rational> cached_idempotent(const StandardTableau& t) {
  if (t.size() > kMemoizedTableauSize) return build_idempotent(t);
  auto& memo = idempotent_memo();
  {
    std::lock_guard lock(memo.mutex);
    if (auto it = memo.values.find(t); it != memo.values.end()) return it->second;
  }
  AlgebraElement<Rational> e = build_idempotent(t);
  std::lock_guard lock(memo.mutex);
  return memo.values.emplace(t, std::move(e)).first->second;
}

AlgebraElement<Rational> build_idempotent(const StandardTableau& t) {
  const int n = t.size();
  const std::size_t deg = static_cast<std::size_t>(n);
  if (n == 1) return AlgebraElement<Rational>::unit(1);

  const StandardTableau parent = t.without_last();
  AlgebraElement<Rational> e = cached_idempotent(parent).embed(deg);

  std::vector<int> rows;
  for (const auto& r : parent.rows()) rows.push_back(static_cast<int>(r.size()));
  const int c = t.content(n);
  const AlgebraElement<Rational> m = jm_element<Rational>(n, deg);
  for (int other : addable_contents(rows)) {
    if (other == c) continue;
    AlgebraElement<Rational> factor = m;
    factor += AlgebraElement<Rational>::basis(Permutation(deg), Rational(-other));
    factor *= Rational(1, c - other);
    e = multiply(e, factor);
  }
  return e;
}

}  // namespace

std::int64_t character(const Partition& lambda, const Partition& mu) {
  if (lambda.weight() != mu.weight())
    throw DomainError("character: |lambda| = " + std::to_string(lambda.weight()) +
                      " but |mu| = " + std::to_string(mu.weight()));
  return murnaghan_nakayama(lambda.parts(), mu.parts());
}

CharacterTable::CharacterTable(int n, std::vector<Partition> partitions, std::vector<std::int64_t> values)
    : n_(n), partitions_(std::move(partitions)), values_(std::move(values)) {
  if (partitions_ != partitions_of(n)) throw DomainError("character table partitions are not those of n");
  if (values_.size() != partitions_.size() * partitions_.size())
    throw DomainError("character table has the wrong number of values");
}

CharacterTable CharacterTable::compute(int n) {
  auto parts = partitions_of(n);
  std::vector<std::int64_t> values;
  values.reserve(parts.size() * parts.size());
  for (const auto& lambda : parts)
    for (const auto& mu : parts) values.push_back(character(lambda, mu));
  return CharacterTable(n, std::move(parts), std::move(values));
}

void CharacterTable::install() const {
  auto& memo = character_memo();
  std::unique_lock lock(memo.mutex);
  for (std::size_t i = 0; i < partitions_.size(); ++i)
    for (std::size_t j = 0; j < partitions_.size(); ++j)
      memo.values.emplace(std::make_pair(partitions_[i].parts(), partitions_[j].parts()), value(i, j));
}

std::uint64_t centralizer_size(const Partition& mu) {
  std::map<int, int> mult;
  for (int p : mu.parts()) ++mult[p];
  std::uint64_t z = 1;
  for (auto [part, m] : mult) {
    for (int k = 0; k < m; ++k) z *= static_cast<std::uint64_t>(part);
    z *= factorial(m);
  }
  return z;
}

AlgebraElement<Rational> young_idempotent(const StandardTableau& t) { return cached_idempotent(t); }

AlgebraElement<Rational> central_idempotent(const Partition& lambda, CentralRoute route) {
  const int n = lambda.weight();
  const std::size_t deg = static_cast<std::size_t>(n);
  AlgebraElement<Rational> p(deg);
  if (route == CentralRoute::tableau_sum) {
    for (const auto& t : standard_tableaux(lambda)) p += young_idempotent(t);
    return p;
  }
  const Rational scale(static_cast<long>(hook_dimension(lambda)), static_cast<long>(factorial(n)));
  std::map<Partition, Rational> by_class;
  for (const auto& sigma : all_permutations(deg)) {
    // sigma and sigma^{-1} are conjugate, so chi(sigma^{-1}) = chi(cycle type of sigma).
    Partition mu = sigma.cycle_type();
    auto it = by_class.find(mu);
    if (it == by_class.end())
      it = by_class.emplace(mu, scale * Rational(character(lambda, mu))).first;
    p.add_term(sigma, it->second);
  }
  return p;
}

Report verify_idempotents(int n) {
  Report r{"orthogonal idempotents, n = " + std::to_string(n), {}};
  const std::size_t deg = static_cast<std::size_t>(n);
  const auto tableaux = all_standard_tableaux(n);
  std::vector<AlgebraElement<Rational>> e;
  for (const auto& t : tableaux) e.push_back(young_idempotent(t));
  const AlgebraElement<Rational> zero(deg);

  bool idempotent = true, orthogonal = true, diagonal = true;
  AlgebraElement<Rational> total(deg);
  for (std::size_t a = 0; a < e.size(); ++a) {
    total += e[a];
    for (std::size_t b = 0; b < e.size(); ++b) {
      const auto prod = multiply(e[a], e[b]);
      if (a == b)
        idempotent = idempotent && prod == e[a];
      else
        orthogonal = orthogonal && prod == zero;
    }
    for (int k = 1; k <= n; ++k) {
      AlgebraElement<Rational> scaled = e[a];
      scaled *= Rational(tableaux[a].content(k));
      diagonal = diagonal && multiply(jm_element<Rational>(k, deg), e[a]) == scaled;
    }
  }
  const std::string count = std::to_string(e.size()) + " tableaux";
  r.add("e_T e_T = e_T", idempotent, count);
  r.add("e_T e_T' = 0 for T != T'", orthogonal);
  r.add("m_k e_T = c_T(k) e_T", diagonal);
  r.add("sum of e_T is the identity", total == AlgebraElement<Rational>::unit(deg));
  return r;
}

Report verify_central(int n) {
  Report r{"central idempotents, n = " + std::to_string(n), {}};
  const auto parts = partitions_of(n);
  std::vector<AlgebraElement<Rational>> p;
  bool routes = true;
  for (const auto& lambda : parts) {
    p.push_back(central_idempotent(lambda, CentralRoute::character));
    routes = routes && p.back() == central_idempotent(lambda, CentralRoute::tableau_sum);
  }
  bool products = true;
  const AlgebraElement<Rational> zero(static_cast<std::size_t>(n));
  for (std::size_t a = 0; a < p.size(); ++a)
    for (std::size_t b = 0; b < p.size(); ++b) products = products && multiply(p[a], p[b]) == (a == b ? p[a] : zero);
  r.add("tableau-sum and character routes agree", routes, std::to_string(parts.size()) + " shapes");
  r.add("P_lambda P_mu = delta P_lambda", products);
  return r;
}

}  // namespace wg
