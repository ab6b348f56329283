#include "wg/wg_unitary.hpp"

#include <map>
#include <set>

#include "wg/young.hpp"

namespace wg {

template <CoefficientRing R>
R c_unitary(const Partition& lambda, const R& tau) {
  R c(1);
  for (std::size_t i = 0; i < lambda.length(); ++i) {
    for (int j = 0; j < lambda[i]; ++j) {
      R factor = tau;
      factor += R(j - static_cast<int>(i));
      c *= factor;
    }
  }
  return c;
}

template <CoefficientRing R>
Matrix<R> gram_unitary(int n, const R& tau) {
  if (n < 1) throw DomainError("gram_unitary: n must be >= 1");
  const auto basis = all_permutations(static_cast<std::size_t>(n));
  std::vector<R> powers{R(1)};
  for (int k = 1; k <= n; ++k) powers.push_back(powers.back() * tau);
  Matrix<R> g(basis.size(), basis.size());
  for (std::size_t a = 0; a < basis.size(); ++a) {
    const Permutation inv = basis[a].inverse();
    for (std::size_t b = 0; b < basis.size(); ++b)
      g(a, b) = powers[static_cast<std::size_t>(compose(inv, basis[b]).num_cycles())];
  }
  return g;
}

template <CoefficientRing R>
std::vector<Partition> excluded_unitary(int n, const R& tau) {
  std::vector<Partition> out;
  for (const auto& lambda : partitions_of(n))
    if (is_zero(c_unitary(lambda, tau))) out.push_back(lambda);
  return out;
}

template <CoefficientRing R>
R wg_function_unitary(const Partition& mu, const R& tau) {
  const int n = mu.weight();
  R total(0);
  for (const auto& lambda : partitions_of(n)) {
    const R c = c_unitary(lambda, tau);
    if (is_zero(c)) continue;
    const auto weight = static_cast<long>(hook_dimension(lambda)) * character(lambda, mu);
    if (weight == 0) continue;
    R term = c.inverse();
    term *= R(weight);
    total += term;
  }
  total *= R(Rational(1, static_cast<long>(factorial(n))));
  return total;
}

template <CoefficientRing R>
WeingartenTableU<R> weingarten_unitary(int n, const R& tau) {
  WeingartenTableU<R> t;
  t.n = n;
  t.tau = tau;
  t.basis = all_permutations(static_cast<std::size_t>(n));
  t.gram = gram_unitary(n, tau);
  t.excluded = excluded_unitary(n, tau);

  std::map<Partition, R> wg_values;
  for (const auto& mu : partitions_of(n)) wg_values.emplace(mu, wg_function_unitary(mu, tau));

  const std::size_t size = t.basis.size();
  t.weingarten = Matrix<R>(size, size);
  for (std::size_t a = 0; a < size; ++a) {
    for (std::size_t b = a; b < size; ++b) {
      const Partition mu = compose(t.basis[a], t.basis[b].inverse()).cycle_type();
      const R& v = wg_values.at(mu);
      t.weingarten(a, b) = v;
      t.weingarten(b, a) = v;
    }
  }
  return t;
}

template <CoefficientRing R>
Report verify_jucys(int n, const R& tau) {
  Report r{"Jucys identity, n = " + std::to_string(n), {}};
  const std::size_t deg = static_cast<std::size_t>(n);
  const AlgebraElement<R> lhs = jm_product_unitary(n, tau);
  AlgebraElement<R> rhs(deg);
  for (const auto& sigma : all_permutations(deg)) rhs.add_term(sigma, power(tau, sigma.num_cycles()));
  r.add("expanded product equals sum of tau^{#cycles} sigma", lhs == rhs,
        std::to_string(lhs.size()) + " terms");

  std::vector<int> ks;
  for (int k = 1; k <= n; ++k) ks.push_back(k);
  const auto raw = expand_jm_product_raw(ks, deg);
  std::set<Permutation> distinct;
  bool powers_match = true;
  for (const auto& t : raw) {
    distinct.insert(t.perm);
    powers_match = powers_match && t.perm.num_cycles() == t.tau_power;
  }
  r.add("n! raw terms, pairwise distinct", raw.size() == factorial(n) && distinct.size() == raw.size());
  r.add("each raw term carries tau^{#cycles}", powers_match);
  return r;
}

template <CoefficientRing R>
Report verify_unitary_spectral(int n, const R& tau) {
  Report r{"unitary spectral decomposition, n = " + std::to_string(n), {}};
  const std::size_t deg = static_cast<std::size_t>(n);
  const AlgebraElement<R> g = jm_product_unitary(n, tau);
  AlgebraElement<R> spectral(deg);
  for (const auto& lambda : partitions_of(n)) {
    AlgebraElement<R> p = central_idempotent(lambda, CentralRoute::character).template convert<R>();
    p *= c_unitary(lambda, tau);
    spectral += p;
  }
  r.add("G = sum c_lambda P_lambda", g == spectral);
  const auto basis = all_permutations(deg);
  const Matrix<R> gram = gram_unitary(n, tau);
  r.add("Gram = left regular matrix of G", regular_matrix(g, basis, Side::left) == gram);
  r.add("Gram = right regular matrix of G", regular_matrix(g, basis, Side::right) == gram);
  return r;
}

#define WG_INSTANTIATE(R)                                                             \
  template R c_unitary<R>(const Partition&, const R&);                                \
  template Matrix<R> gram_unitary<R>(int, const R&);                                  \
  template std::vector<Partition> excluded_unitary<R>(int, const R&);                 \
  template R wg_function_unitary<R>(const Partition&, const R&);                      \
  template WeingartenTableU<R> weingarten_unitary<R>(int, const R&);                  \
  template Report verify_jucys<R>(int, const R&);                                     \
  template Report verify_unitary_spectral<R>(int, const R&);

WG_INSTANTIATE(Rational)
WG_INSTANTIATE(TauRational)

#undef WG_INSTANTIATE

}  // namespace wg
