#include "wg/suites.hpp"

#include <algorithm>

#include "wg/wg_orthogonal.hpp"
#include "wg/wg_unitary.hpp"
#include "wg/young.hpp"

namespace wg {

namespace {

// Calls f with the symbolic tau or the concrete one.
template <class F>
Report with_tau(const std::optional<Rational>& tau, F&& f) {
  if (tau) return f(*tau);
  return f(TauRational::tau());
}

std::string tau_suffix(const std::optional<Rational>& tau) { return tau ? ", tau = " + tau->str() : ", symbolic tau"; }

template <CoefficientRing R>
Report pseudo_inverse_report(const std::string& title, const Matrix<R>& gram, const Matrix<R>& w,
                             bool invertible) {
  Report r = pseudo_inverse_check(gram, w);
  r.title = title;
  if (invertible) r.add("W G = I", is_left_inverse(w, gram));
  return r;
}

void run_one(const std::string& name, const SuiteOptions& o, std::vector<Report>& out) {
  const int n = o.n;
  if (name == "jucys") {
    for (int k = 1; k <= n; ++k) out.push_back(with_tau(o.tau, [k](const auto& t) { return verify_jucys(k, t); }));
  } else if (name == "oid") {
    for (int k = 1; k <= n; ++k) out.push_back(with_tau(o.tau, [k](const auto& t) { return verify_oid(k, t); }));
  } else if (name == "idempotents") {
    for (int k = 1; k <= n; ++k) out.push_back(verify_idempotents(k));
  } else if (name == "central") {
    for (int k = 1; k <= n; ++k) {
      out.push_back(verify_central(k));
      out.push_back(with_tau(o.tau, [k](const auto& t) { return verify_unitary_spectral(k, t); }));
      out.push_back(with_tau(o.tau, [k](const auto& t) { return verify_orthogonal_spectral(k, t); }));
    }
  } else if (name == "pseudoinverse") {
    if (o.table) {
      out.push_back(check_table(*o.table));
      return;
    }
    for (int k = 1; k <= n; ++k) {
      out.push_back(with_tau(o.tau, [k, &o](const auto& t) {
        const auto table = weingarten_unitary(k, t);
        return pseudo_inverse_report("unitary pseudo-inverse, n = " + std::to_string(k) + tau_suffix(o.tau),
                                     table.gram, table.weingarten, table.excluded.empty());
      }));
      out.push_back(with_tau(o.tau, [k, &o](const auto& t) {
        const auto table = weingarten_orthogonal(k, t);
        return pseudo_inverse_report("orthogonal pseudo-inverse, n = " + std::to_string(k) + tau_suffix(o.tau),
                                     table.gram, table.weingarten, table.excluded.empty());
      }));
    }
  } else if (name == "doubling") {
    const int top = std::min(n, o.deep ? 4 : 3);
    for (int k = 1; k <= top; ++k) out.push_back(verify_doubling(k));
    if (o.deep && n < 4) out.push_back(verify_doubling(4));
  } else if (name == "keyid") {
    for (int k = 1; k <= n; ++k)
      for (int j = 1; j <= k; ++j) out.push_back(verify_key_identity(k, j));
  } else if (name == "stability") {
    for (int k = 1; k <= n; ++k)
      out.push_back(with_tau(o.tau, [k](const auto& t) { return verify_stability_lemma(k, t); }));
  } else if (name == "commute") {
    const Rational t1 = o.tau.value_or(Rational(3));
    const Rational t2 = t1 == Rational(7) ? Rational(3) : Rational(7);
    for (int k = 1; k <= n; ++k) out.push_back(verify_gram_commutation(k, t1, t2));
  } else {
    throw DomainError("unknown suite '" + name + "'");
  }
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"jucys",    "oid",   "idempotents", "central",  "pseudoinverse",
                                              "doubling", "keyid", "stability",   "commute"};
  return names;
}

std::vector<Report> run_suite(const std::string& name, const SuiteOptions& options) {
  if (options.n < 1) throw DomainError("verify: n must be >= 1");
  std::vector<Report> out;
  if (name == "all") {
    for (const auto& s : suite_names()) run_one(s, options, out);
  } else {
    run_one(name, options, out);
  }
  return out;
}

Report check_table(const io::ParsedTable& table) {
  Report r = pseudo_inverse_check(table.gram, table.weingarten);
  r.title = table.group + " table, n = " + std::to_string(table.n) + ", tau = " + table.tau;
  if (table.n < 1 || table.n > 5) {
    r.add("table size within 1..5", false, "n = " + std::to_string(table.n));
    return r;
  }
  Matrix<TauRational> fresh;
  if (table.tau == "symbolic") {
    const auto t = TauRational::tau();
    fresh = table.group == "unitary" ? gram_unitary(table.n, t) : gram_orthogonal(table.n, t);
  } else {
    const Rational t = Rational::parse(table.tau);
    const auto g = table.group == "unitary" ? gram_unitary(table.n, t) : gram_orthogonal(table.n, t);
    fresh = g.map([](const Rational& x) { return TauRational(x); });
  }
  r.add("Gram matrix matches a fresh computation", fresh == table.gram);
  return r;
}

}  // namespace wg
