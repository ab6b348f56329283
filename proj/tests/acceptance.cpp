// Acceptance run: one PASS/FAIL line per criterion, each with its runtime
// limit. Exit status is nonzero if any criterion fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>

#include "wg/haar_mc.hpp"
#include "wg/wg_orthogonal.hpp"
#include "wg/wg_unitary.hpp"
#include "wg/young.hpp"

using namespace wg;

namespace {

constexpr std::uint64_t kMcSeed = 2;
constexpr std::uint64_t kMcSamples = 200000;
constexpr double kMcThreshold = 4.0;

struct Outcome {
  bool passed = true;
  std::string detail;
  std::vector<std::string> failures;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      passed = false;
      failures.push_back(what);
    }
  }
  void require(const Report& r) {
    for (const auto& c : r.checks) require(c.passed, r.title + ": " + c.name);
  }
};

int failures = 0;

void criterion(int id, const std::string& name, double limit_seconds, const std::function<void(Outcome&)>& body) {
  Outcome o;
  const auto start = std::chrono::steady_clock::now();
  try {
    body(o);
  } catch (const std::exception& e) {
    o.require(false, std::string("exception: ") + e.what());
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  o.require(secs < limit_seconds, "runtime over limit");
  if (!o.passed) ++failures;
  char timing[64];
  std::snprintf(timing, sizeof timing, "%.2f s, limit %.0f s", secs, limit_seconds);
  std::cout << (o.passed ? "PASS" : "FAIL") << "  " << (id < 10 ? " " : "") << id << "  " << name << "  (" << timing;
  if (!o.detail.empty()) std::cout << "; " << o.detail;
  std::cout << ")\n";
  for (const auto& f : o.failures) std::cout << "        failed: " << f << '\n';
  std::cout.flush();
}

const TauRational t = TauRational::tau();

// Inverse of the n = 2 Gram matrices by cofactors: [[a,b],[b,a]] and the
// 3x3 matrix with a on the diagonal and b elsewhere.
std::pair<TauRational, TauRational> inverse_2x2(const TauRational& a, const TauRational& b) {
  const TauRational det = a * a - b * b;
  return {a / det, -b / det};
}
std::pair<TauRational, TauRational> inverse_3x3(const TauRational& a, const TauRational& b) {
  const TauRational d = (a - b) * (a + TauRational(2) * b);
  return {(a + b) / d, -b / d};
}

}  // namespace

int main() {
  std::cout << "acceptance run, Monte-Carlo seed " << kMcSeed << ", " << kMcSamples << " samples, |z| threshold "
            << kMcThreshold << "\n";

  criterion(1, "unitary product identity, symbolic tau, n = 1..6", 30, [](Outcome& o) {
    for (int n = 1; n <= 6; ++n) o.require(verify_jucys(n, t));
    o.require(jm_product_unitary(6, t).size() == 720, "720 terms at n = 6");
    o.detail = "720 terms at n = 6";
  });

  criterion(2, "orthogonal product identity, symbolic tau, n = 1..4", 30, [](Outcome& o) {
    for (int n = 1; n <= 4; ++n) o.require(verify_oid(n, t));
    o.require(jm_product_orthogonal(4, t).size() == 105, "105 terms at n = 4");
    o.detail = "105 terms at n = 4";
  });

  criterion(3, "orthogonal idempotents and central idempotent routes, n <= 5", 300, [](Outcome& o) {
    for (int n = 1; n <= 5; ++n) {
      o.require(verify_idempotents(n));
      o.require(verify_central(n));
    }
    o.detail = std::to_string(all_standard_tableaux(5).size()) + " tableaux at n = 5";
  });

  criterion(4, "doubling proposition at 2n = 2, 4, 6", 120, [](Outcome& o) {
    for (int n = 1; n <= 3; ++n) o.require(verify_doubling(n));
  });

  criterion(5, "key identity, all k <= n <= 4", 60, [](Outcome& o) {
    for (int n = 1; n <= 4; ++n)
      for (int k = 1; k <= n; ++k) o.require(verify_key_identity(n, k));
  });

  criterion(6, "stability lemma, symbolic n <= 3 and n = 4 at tau = 7", 300, [](Outcome& o) {
    for (int n = 1; n <= 3; ++n) o.require(verify_stability_lemma(n, t));
    o.require(verify_stability_lemma(4, Rational(7)));
  });

  criterion(7, "pseudo-inverse contract, generic and degenerate tau", 600, [](Outcome& o) {
    for (int n = 1; n <= 4; ++n) {
      const auto u = weingarten_unitary(n, t);
      o.require(pseudo_inverse_check(u.gram, u.weingarten));
    }
    const auto u5 = weingarten_unitary(5, Rational(7));
    o.require(pseudo_inverse_check(u5.gram, u5.weingarten));
    for (int n = 1; n <= 3; ++n) {
      const auto w = weingarten_orthogonal(n, t);
      o.require(pseudo_inverse_check(w.gram, w.weingarten));
    }
    const auto o4 = weingarten_orthogonal(4, Rational(7));
    o.require(pseudo_inverse_check(o4.gram, o4.weingarten));

    const auto ud = weingarten_unitary(3, Rational(1));
    o.require(!ud.excluded.empty(), "unitary n = 3, tau = 1 has excluded shapes");
    o.require(pseudo_inverse_check(ud.gram, ud.weingarten));
    const auto od = weingarten_orthogonal(2, Rational(1));
    o.require(!od.excluded.empty(), "orthogonal n = 2, tau = 1 has excluded shapes");
    o.require(pseudo_inverse_check(od.gram, od.weingarten));
    o.detail = "excluded " + std::to_string(ud.excluded.size()) + " and " + std::to_string(od.excluded.size()) +
               " shapes in the degenerate cases";
  });

  criterion(8, "W G = I for unitary (3, 5) and orthogonal (3, 8)", 60, [](Outcome& o) {
    const auto u = weingarten_unitary(3, Rational(5));
    o.require(u.excluded.empty() && is_left_inverse(u.weingarten, u.gram), "unitary n = 3, tau = 5");
    const auto w = weingarten_orthogonal(3, Rational(8));
    o.require(w.excluded.empty() && is_left_inverse(w.weingarten, w.gram), "orthogonal n = 3, tau = 8");
  });

  criterion(9, "closed forms at n = 2 against cofactor inverses of the Gram matrices", 1, [](Outcome& o) {
    const TauRational one(1);
    const auto [ud, uo] = inverse_2x2(t * t, t);
    o.require(ud == one / (t * t - one) && uo == -one / (t * (t * t - one)), "unitary cofactor inverse closed form");
    const auto u = weingarten_unitary(2, t);
    o.require(u.weingarten(0, 0) == ud && u.weingarten(1, 1) == ud, "unitary diagonal");
    o.require(u.weingarten(0, 1) == uo && u.weingarten(1, 0) == uo, "unitary off-diagonal");

    const auto [od, oo] = inverse_3x3(t * t, t);
    const TauRational den = t * (t - one) * (t + TauRational(2));
    o.require(od == (t + one) / den && oo == -one / den, "orthogonal cofactor inverse closed form");
    const auto w = weingarten_orthogonal(2, t);
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = 0; j < 3; ++j) o.require(w.weingarten(i, j) == (i == j ? od : oo), "orthogonal entry");
    o.detail = "off-diagonal " + w.weingarten(0, 1).str();
  });

  criterion(10, "Gram matrices at tau = 3 and 7 commute, orthogonal n <= 4", 120, [](Outcome& o) {
    for (int n = 1; n <= 4; ++n) o.require(verify_gram_commutation(n, Rational(3), Rational(7)));
  });

  criterion(11, "Monte-Carlo moments, unitary tau = 3 and orthogonal tau = 4, degree 2", 120, [](Outcome& o) {
    std::ostringstream detail;
    double expected = 0;
    for (auto [group, tau] : {std::pair{Group::unitary, 3}, std::pair{Group::orthogonal, 4}}) {
      const auto grid = moment_grid(group, tau, 2);
      const auto reports = estimate_moments(group, tau, grid, kMcSamples, kMcSeed);
      double max_z = 0;
      int bad = 0;
      for (const auto& r : reports) {
        max_z = std::max(max_z, r.max_abs_z());
        if (r.max_abs_z() > kMcThreshold) {
          ++bad;
          o.require(false, group_name(group) + " moment " + r.spec.indices.str() + " z = " + std::to_string(r.z));
        }
      }
      const std::size_t tests = reports.size() * (group == Group::unitary ? 2 : 1);
      expected += static_cast<double>(tests) * normal_tail(kMcThreshold);
      char buf[160];
      std::snprintf(buf, sizeof buf, "%s: %zu moments, max |z| %.2f, %d over; ", group_name(group).c_str(),
                    reports.size(), max_z, bad);
      detail << buf;
    }
    char buf[96];
    std::snprintf(buf, sizeof buf, "expected false failures %.2f", expected);
    detail << buf;
    o.detail = detail.str();
  });

  criterion(12, "character orthogonality relations and degrees, n <= 8", 30, [](Outcome& o) {
    for (int n = 1; n <= 8; ++n) {
      const auto table = CharacterTable::compute(n);
      const auto& parts = table.partitions();
      const std::size_t k = parts.size();
      const Partition ones(std::vector<int>(static_cast<std::size_t>(n), 1));
      for (std::size_t a = 0; a < k; ++a) {
        o.require(character(parts[a], ones) == static_cast<std::int64_t>(hook_dimension(parts[a])),
                  "degree of " + parts[a].str());
        for (std::size_t b = 0; b < k; ++b) {
          Rational rows(0), cols(0);
          for (std::size_t j = 0; j < k; ++j) {
            rows += Rational(table.value(a, j) * table.value(b, j)) /
                    Rational(static_cast<long>(centralizer_size(parts[j])));
            cols += Rational(table.value(j, a) * table.value(j, b));
          }
          o.require(rows == Rational(a == b ? 1 : 0), "row relation");
          o.require(cols == (a == b ? Rational(static_cast<long>(centralizer_size(parts[a]))) : Rational(0)),
                    "column relation");
        }
      }
    }
    o.detail = std::to_string(partitions_of(8).size()) + " classes at n = 8";
  });

  std::cout << (failures == 0 ? "all 12 criteria passed" : std::to_string(failures) + " criteria failed") << '\n';
  return failures == 0 ? 0 : 1;
}
