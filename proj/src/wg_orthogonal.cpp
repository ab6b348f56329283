#include "wg/wg_orthogonal.hpp"

#include <algorithm>
#include <mutex>
#include <set>

#include "wg/young.hpp"

namespace wg {

namespace {

std::size_t points_of(int n) { return static_cast<std::size_t>(2 * n); }

// Pairing on 2n-2 points obtained by deleting the pair (2n-1, 2n).
Pairing drop_last_pair(const Pairing& pi) {
  std::vector<std::pair<int, int>> pairs;
  const int top = static_cast<int>(pi.points());
  for (auto [a, b] : pi.pairs()) {
    if (a == top - 1 && b == top) continue;
    pairs.emplace_back(a, b);
  }
  return Pairing::from_pairs(pairs);
}

Pairing conjugate_pairing(const Permutation& g, const Pairing& pi) {
  return Pairing::from_permutation(conjugate(g, pi.as_permutation()));
}

const std::vector<Permutation>& hyperoctahedral_cached(int n) {
  static std::map<int, std::vector<Permutation>> cache;
  static std::mutex mutex;
  std::lock_guard lock(mutex);
  auto it = cache.find(n);
  if (it == cache.end()) it = cache.emplace(n, hyperoctahedral_elements(n)).first;
  return it->second;
}

}  // namespace

Pairing beta(int n) {
  if (n < 1) throw DomainError("beta: n must be >= 1");
  std::vector<std::pair<int, int>> pairs;
  for (int k = 1; k <= n; ++k) pairs.emplace_back(2 * k - 1, 2 * k);
  return Pairing::from_pairs(pairs);
}

CosetRepresentative coset_representative(const Pairing& pi) {
  const int top = static_cast<int>(pi.points());
  if (top == 2) return {pi, Permutation(2)};
  const int partner = pi.partner(top);
  if (partner == top - 1) {
    const auto smaller = coset_representative(drop_last_pair(pi));
    return {pi, smaller.sigma.embed(static_cast<std::size_t>(top))};
  }
  const Permutation s = Permutation::transposition(static_cast<std::size_t>(top), partner, top - 1);
  const auto smaller = coset_representative(drop_last_pair(conjugate_pairing(s, pi)));
  return {pi, compose(s, smaller.sigma.embed(static_cast<std::size_t>(top)))};
}

Permutation matching_conjugator(const Pairing& from, const Pairing& to) {
  if (from.points() != to.points()) throw DomainError("matching_conjugator: size mismatch");
  std::vector<int> img(from.points());
  const auto a = from.pairs();
  const auto b = to.pairs();
  for (std::size_t k = 0; k < a.size(); ++k) {
    img[static_cast<std::size_t>(a[k].first - 1)] = b[k].first;
    img[static_cast<std::size_t>(a[k].second - 1)] = b[k].second;
  }
  return Permutation::from_images(img);
}

std::vector<Permutation> centralizer(const Pairing& pi) {
  const int n = static_cast<int>(pi.blocks());
  const Permutation rho = matching_conjugator(beta(n), pi);
  const Permutation rho_inv = rho.inverse();
  std::vector<Permutation> out;
  for (const auto& h : hyperoctahedral_cached(n)) out.push_back(compose(compose(rho, h), rho_inv));
  std::sort(out.begin(), out.end());
  return out;
}

Partition coset_type(const Pairing& pi, const Pairing& pi_prime) {
  const auto parts = compose(pi.as_permutation(), pi_prime.as_permutation()).cycle_type().parts();
  std::vector<int> half;
  for (std::size_t i = 0; i < parts.size(); i += 2) half.push_back(parts[i]);
  return Partition(std::move(half));
}

template <CoefficientRing R>
R c_orthogonal(const Partition& lambda, const R& tau) {
  R c(1);
  for (std::size_t i = 1; i <= lambda.length(); ++i) {
    for (int j = 1; j <= lambda[i - 1]; ++j) {
      R factor = tau;
      factor += R(2 * j - 1 - static_cast<int>(i));
      c *= factor;
    }
  }
  return c;
}

template <CoefficientRing R>
Matrix<R> gram_orthogonal(int n, const R& tau) {
  const auto basis = enumerate_pairings(n);
  std::vector<R> powers{R(1)};
  for (int k = 1; k <= n; ++k) powers.push_back(powers.back() * tau);
  Matrix<R> g(basis.size(), basis.size());
  for (std::size_t a = 0; a < basis.size(); ++a)
    for (std::size_t b = 0; b < basis.size(); ++b)
      g(a, b) = powers[static_cast<std::size_t>(loop_count(basis[a], basis[b]))];
  return g;
}

template <CoefficientRing R>
std::vector<Partition> excluded_orthogonal(int n, const R& tau) {
  std::vector<Partition> out;
  for (const auto& lambda : partitions_of(n))
    if (is_zero(c_orthogonal(lambda, tau))) out.push_back(lambda);
  return out;
}

std::map<Partition, std::uint64_t> coset_class_histogram(const Pairing& pi, const Pairing& pi_prime,
                                                         const Permutation& sigma0) {
  if (conjugate(sigma0, pi_prime.as_permutation()) != pi.as_permutation())
    throw DomainError("coset_class_histogram: sigma0 does not conjugate pi' to pi");
  std::map<Partition, std::uint64_t> hist;
  for (const auto& c : centralizer(pi_prime)) ++hist[compose(sigma0, c).cycle_type()];
  return hist;
}

namespace {

Rational projector_from_histogram(const Partition& lambda, const std::map<Partition, std::uint64_t>& hist) {
  const Partition doubled = double_shape(lambda);
  Rational sum(0);
  // chi(sigma^{-1}) = chi(cycle type of sigma).
  for (const auto& [mu, count] : hist) sum += Rational(static_cast<long>(count) * character(doubled, mu));
  const int m = doubled.weight();
  return sum * Rational(static_cast<long>(hook_dimension(doubled)), static_cast<long>(factorial(m)));
}

}  // namespace

Rational projector_entry(const Partition& lambda, const Pairing& pi, const Pairing& pi_prime,
                         const Permutation& sigma0) {
  if (static_cast<std::size_t>(lambda.weight()) != pi.blocks() || pi.points() != pi_prime.points())
    throw DomainError("projector_entry: lambda must be a partition of n for pairings on 2n points");
  return projector_from_histogram(lambda, coset_class_histogram(pi, pi_prime, sigma0));
}

Rational projector_entry(const Partition& lambda, const Pairing& pi, const Pairing& pi_prime) {
  return projector_entry(lambda, pi, pi_prime, matching_conjugator(pi_prime, pi));
}

template <CoefficientRing R>
WeingartenTableO<R> weingarten_orthogonal(int n, const R& tau) {
  WeingartenTableO<R> t;
  t.n = n;
  t.tau = tau;
  t.basis = enumerate_pairings(n);
  t.gram = gram_orthogonal(n, tau);
  t.excluded = excluded_orthogonal(n, tau);

  std::vector<std::pair<Partition, R>> weights;  // (lambda, c_lambda^{-1}) for included lambda
  for (const auto& lambda : partitions_of(n)) {
    const R c = c_orthogonal(lambda, tau);
    if (!is_zero(c)) weights.emplace_back(lambda, c.inverse());
  }

  std::map<Partition, R> by_type;
  const std::size_t size = t.basis.size();
  t.weingarten = Matrix<R>(size, size);
  for (std::size_t a = 0; a < size; ++a) {
    for (std::size_t b = a; b < size; ++b) {
      const Partition type = coset_type(t.basis[a], t.basis[b]);
      auto it = by_type.find(type);
      if (it == by_type.end()) {
        const auto hist = coset_class_histogram(t.basis[a], t.basis[b],
                                                matching_conjugator(t.basis[b], t.basis[a]));
        R value(0);
        for (const auto& [lambda, inv_c] : weights) {
          R term = inv_c;
          term *= R(projector_from_histogram(lambda, hist));
          value += term;
        }
        it = by_type.emplace(type, std::move(value)).first;
      }
      t.weingarten(a, b) = it->second;
      t.weingarten(b, a) = it->second;
    }
  }
  return t;
}

template <CoefficientRing R>
Matrix<R> weingarten_orthogonal_by_idempotents(int n, const R& tau) {
  const auto basis = enumerate_pairings(n);
  const auto ph = average_projector<Rational>(n);
  const Rational h_order(static_cast<long>(hyperoctahedral_cached(n).size()));
  std::vector<Permutation> reps;
  for (const auto& pi : basis) reps.push_back(coset_representative(pi).sigma);

  Matrix<R> w(basis.size(), basis.size());
  for (const auto& lambda : partitions_of(n)) {
    const R c = c_orthogonal(lambda, tau);
    if (is_zero(c)) continue;
    const R inv_c = c.inverse();
    const auto p = central_idempotent(double_shape(lambda), CentralRoute::tableau_sum);
    for (std::size_t b = 0; b < basis.size(); ++b) {
      const auto image = multiply(p, multiply(AlgebraElement<Rational>::basis(reps[b]), ph));
      for (std::size_t a = 0; a < basis.size(); ++a) {
        R entry(image.coefficient(reps[a]) * h_order);
        entry *= inv_c;
        w(a, b) += entry;
      }
    }
  }
  return w;
}

template <CoefficientRing R>
Report verify_oid(int n, const R& tau) {
  Report r{"orthogonal product identity, n = " + std::to_string(n), {}};
  const std::size_t deg = points_of(n);
  const Pairing b = beta(n);

  std::vector<int> ks;
  for (int k = n; k >= 1; --k) ks.push_back(2 * k - 1);
  const auto raw = expand_jm_product_raw(ks, deg);
  std::map<Permutation, int> raw_terms;
  for (const auto& t : raw) raw_terms.emplace(t.perm, t.tau_power);
  r.add("(2n-1)!! raw terms", raw.size() == double_factorial_odd(n), std::to_string(raw.size()));
  r.add("raw terms pairwise distinct", raw_terms.size() == raw.size());

  AlgebraElement<R> rhs(deg);
  bool conjugation_ok = true;
  bool term_by_term = true;
  for (const auto& pi : enumerate_pairings(n)) {
    const auto rep = coset_representative(pi);
    conjugation_ok = conjugation_ok && conjugate(rep.sigma, b.as_permutation()) == pi.as_permutation();
    const int loops = loop_count(b, pi);
    auto it = raw_terms.find(rep.sigma);
    term_by_term = term_by_term && it != raw_terms.end() && it->second == loops;
    rhs.add_term(rep.sigma, power(tau, loops));
  }
  r.add("sigma_pi beta_n sigma_pi^{-1} = pi", conjugation_ok);
  r.add("raw terms match sigma_pi with tau^{loops}", term_by_term);
  const AlgebraElement<R> lhs = jm_product_orthogonal(n, tau);
  r.add("expanded product equals sum_pi sigma_pi tau^{loops}", lhs == rhs,
        std::to_string(lhs.size()) + " terms");
  return r;
}

template <CoefficientRing R>
Report verify_stability_lemma(int n, const R& tau) {
  Report r{"stability lemma, n = " + std::to_string(n), {}};
  const auto g = jm_product_orthogonal(n, tau);
  const auto ph_g = average_over_hyperoctahedral(n, g);
  // G P_H = S(P_H S(G)) for the antipode S, since S(P_H) = P_H.
  r.add("G P_H = P_H G", antipode(average_over_hyperoctahedral(n, antipode(g))) == ph_g);

  const auto basis = enumerate_pairings(n);
  std::vector<Permutation> reps;
  std::map<Pairing, std::size_t> coset_of;
  for (std::size_t a = 0; a < basis.size(); ++a) {
    reps.push_back(coset_representative(basis[a]).sigma);
    coset_of.emplace(basis[a], a);
  }
  const Permutation b_perm = beta(n).as_permutation();
  const std::size_t h_size = hyperoctahedral_cached(n).size();
  const R h_order(static_cast<long>(h_size));

  // sigma_b P_H G equals sum_a G[a,b] sigma_a P_H exactly when its
  // coefficient is constant on each coset sigma_a H (and equal to the one at
  // sigma_a), with full cosets in the support.
  Matrix<R> extracted(basis.size(), basis.size());
  bool expansion_ok = true;
  for (std::size_t b = 0; b < basis.size(); ++b) {
    const auto lhs = multiply(AlgebraElement<R>::basis(reps[b]), ph_g);
    std::size_t nonzero = 0;
    for (std::size_t a = 0; a < basis.size(); ++a) {
      R coeff = lhs.coefficient(reps[a]);
      if (!is_zero(coeff)) ++nonzero;
      coeff *= h_order;
      extracted(a, b) = coeff;
    }
    expansion_ok = expansion_ok && lhs.size() == nonzero * h_size;
    for (const auto& [sigma, coeff] : lhs.terms()) {
      if (!expansion_ok) break;
      const auto it = coset_of.find(Pairing::from_permutation(conjugate(sigma, b_perm)));
      expansion_ok = it != coset_of.end() && coeff == lhs.coefficient(reps[it->second]);
    }
  }
  r.add("sigma_pi P_H G = sum G[pi',pi] sigma_pi' P_H", expansion_ok);
  r.add("extracted matrix equals Gram matrix", extracted == gram_orthogonal(n, tau));
  return r;
}

Report verify_key_identity(int n, int k) {
  if (k < 1 || k > n) throw DomainError("verify_key_identity: need 1 <= k <= n");
  Report r{"key identity, n = " + std::to_string(n) + ", k = " + std::to_string(k), {}};
  const std::size_t deg = points_of(n);
  auto x = jm_element<Rational>(2 * k, deg);
  x -= jm_element<Rational>(2 * k - 1, deg);
  x -= AlgebraElement<Rational>::unit(deg);
  const auto product = multiply(average_projector<Rational>(n), x);
  r.add("P_H (m_2k - m_2k-1 - 1) = 0", product.is_zero(), std::to_string(product.size()) + " surviving terms");
  return r;
}

template <CoefficientRing R>
AlgebraElement<R> average_over_hyperoctahedral(int n, const AlgebraElement<R>& x) {
  const auto factors = hyperoctahedral_sum_factors(n);
  AlgebraElement<R> y = x;
  for (auto it = factors.rbegin(); it != factors.rend(); ++it) y = multiply(it->template convert<R>(), y);
  y *= R(Rational(1, static_cast<long>(hyperoctahedral_cached(n).size())));
  return y;
}

Report verify_doubling(int n) {
  Report r{"doubling proposition, 2n = " + std::to_string(2 * n), {}};
  std::set<StandardTableau> doubled;
  for (const auto& t : all_standard_tableaux(n)) doubled.insert(double_tableau(t));

  std::set<StandardTableau> survivors;
  std::size_t killed = 0;
  bool pairs_on_same_row = true;
  bool even_rows = true;
  for (const auto& t : all_standard_tableaux(2 * n)) {
    if (average_over_hyperoctahedral(n, young_idempotent(t)).is_zero()) {
      ++killed;
      continue;
    }
    survivors.insert(t);
    for (int k = 1; k <= n; ++k) {
      auto [r1, c1] = t.position(2 * k - 1);
      auto [r2, c2] = t.position(2 * k);
      pairs_on_same_row = pairs_on_same_row && r1 == r2 && c2 == c1 + 1;
    }
    for (int part : t.shape().parts()) even_rows = even_rows && part % 2 == 0;
  }
  r.add("survivors are exactly the doubled tableaux", survivors == doubled,
        std::to_string(survivors.size()) + " survivors, " + std::to_string(killed) + " annihilated");
  r.add("2k-1 and 2k adjacent in one row of every survivor", pairs_on_same_row);
  r.add("survivor shapes have even row lengths", even_rows);
  return r;
}

template <CoefficientRing R>
Report verify_orthogonal_spectral(int n, const R& tau) {
  Report r{"orthogonal spectral decomposition, n = " + std::to_string(n), {}};
  const std::size_t deg = points_of(n);
  AlgebraElement<R> spectral(deg);
  for (const auto& lambda : partitions_of(n)) {
    auto p = central_idempotent(double_shape(lambda), CentralRoute::character).template convert<R>();
    p *= c_orthogonal(lambda, tau);
    spectral += p;
  }
  r.add("P_H G = P_H sum c_lambda P_2lambda",
        average_over_hyperoctahedral(n, jm_product_orthogonal(n, tau)) == average_over_hyperoctahedral(n, spectral));
  return r;
}

Report verify_gram_commutation(int n, const Rational& tau1, const Rational& tau2) {
  Report r{"Gram commutation, n = " + std::to_string(n) + ", tau = " + tau1.str() + ", " + tau2.str(), {}};
  const auto g1 = gram_orthogonal(n, tau1);
  const auto g2 = gram_orthogonal(n, tau2);
  r.add("G(tau1) G(tau2) = G(tau2) G(tau1)", g1 * g2 == g2 * g1);
  return r;
}

#define WG_INSTANTIATE(R)                                                              \
  template R c_orthogonal<R>(const Partition&, const R&);                              \
  template Matrix<R> gram_orthogonal<R>(int, const R&);                                \
  template std::vector<Partition> excluded_orthogonal<R>(int, const R&);               \
  template WeingartenTableO<R> weingarten_orthogonal<R>(int, const R&);                \
  template Matrix<R> weingarten_orthogonal_by_idempotents<R>(int, const R&);           \
  template Report verify_oid<R>(int, const R&);                                        \
  template Report verify_stability_lemma<R>(int, const R&);                            \
  template Report verify_orthogonal_spectral<R>(int, const R&);                        \
  template AlgebraElement<R> average_over_hyperoctahedral<R>(int, const AlgebraElement<R>&);

WG_INSTANTIATE(Rational)
WG_INSTANTIATE(TauRational)

#undef WG_INSTANTIATE

}  // namespace wg
