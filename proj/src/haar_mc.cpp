#include "wg/haar_mc.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <sstream>
#include <thread>

#include "text_scan.hpp"
#include "wg/errors.hpp"
#include "wg/wg_orthogonal.hpp"
#include "wg/wg_unitary.hpp"

namespace wg {

namespace {

constexpr std::size_t kChunks = 64;
constexpr std::uint64_t kGolden = 0x9e3779b97f4a7c15ULL;

std::uint64_t splitmix64(std::uint64_t x) {
  x += kGolden;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// Running mean and sum of squared deviations; merged with Chan's update.
struct Moments {
  double count = 0;
  double mean = 0;
  double m2 = 0;

  void push(double x) {
    count += 1;
    const double delta = x - mean;
    mean += delta / count;
    m2 += delta * (x - mean);
  }
  void merge(const Moments& o) {
    if (o.count == 0) return;
    if (count == 0) {
      *this = o;
      return;
    }
    const double total = count + o.count;
    const double delta = o.mean - mean;
    mean += delta * o.count / total;
    m2 += o.m2 + delta * delta * count * o.count / total;
    count = total;
  }
  double stderr_of_mean() const { return count < 2 ? 0.0 : std::sqrt(m2 / (count - 1) / count); }
};

using ChunkStats = std::vector<std::pair<Moments, Moments>>;  // (real, imag) per moment

// Pairwise merge of chunks [lo, hi) in a fixed tree.
ChunkStats merge_tree(std::vector<ChunkStats>& chunks, std::size_t lo, std::size_t hi) {
  if (hi - lo == 1) return chunks[lo];
  const std::size_t mid = lo + (hi - lo) / 2;
  ChunkStats left = merge_tree(chunks, lo, mid);
  const ChunkStats right = merge_tree(chunks, mid, hi);
  for (std::size_t k = 0; k < left.size(); ++k) {
    left[k].first.merge(right[k].first);
    left[k].second.merge(right[k].second);
  }
  return left;
}

double z_score(double estimate, double se, double exact) {
  if (se > 0) return (estimate - exact) / se;
  return estimate == exact ? 0.0 : HUGE_VAL;
}

std::vector<int> parse_index_list(detail::TextScanner& sc) {
  std::vector<int> out;
  sc.skip_space();
  if (sc.peek() == ';' || sc.peek() == '\0') return out;
  do {
    out.push_back(static_cast<int>(sc.integer()));
  } while (sc.accept(','));
  return out;
}

std::string join(const std::vector<int>& v) {
  std::string s;
  for (std::size_t k = 0; k < v.size(); ++k) s += (k ? "," : "") + std::to_string(v[k]);
  return s;
}

// Multisets of size k from {0, ..., m-1}, as nondecreasing sequences.
void multisets(int m, int k, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
  if (static_cast<int>(cur.size()) == k) {
    out.push_back(cur);
    return;
  }
  for (int x = cur.empty() ? 0 : cur.back(); x < m; ++x) {
    cur.push_back(x);
    multisets(m, k, cur, out);
    cur.pop_back();
  }
}

}  // namespace

std::string group_name(Group g) { return g == Group::unitary ? "unitary" : "orthogonal"; }

Group parse_group(const std::string& name) {
  if (name == "unitary") return Group::unitary;
  if (name == "orthogonal") return Group::orthogonal;
  throw DomainError("unknown group '" + name + "'");
}

std::string MomentIndices::str() const {
  std::string s = join(i) + ";" + join(j);
  if (!i_conj.empty() || !j_conj.empty()) s += ";" + join(i_conj) + ";" + join(j_conj);
  return s;
}

MomentIndices MomentIndices::parse(const std::string& text, Group group) {
  detail::TextScanner sc(text, "moment indices");
  MomentIndices m;
  m.i = parse_index_list(sc);
  sc.expect(';');
  m.j = parse_index_list(sc);
  if (group == Group::unitary) {
    sc.expect(';');
    m.i_conj = parse_index_list(sc);
    sc.expect(';');
    m.j_conj = parse_index_list(sc);
  }
  sc.finish();
  return m;
}

double MomentReport::max_abs_z() const { return std::max(std::abs(z), std::abs(z_imag)); }

double normal_tail(double threshold) { return std::erfc(threshold / std::sqrt(2.0)); }

Eigen::MatrixXcd sample_unitary(int tau, std::mt19937_64& rng) {
  std::normal_distribution<double> normal(0.0, std::sqrt(0.5));
  Eigen::MatrixXcd g(tau, tau);
  for (int c = 0; c < tau; ++c)
    for (int r = 0; r < tau; ++r) {
      const double re = normal(rng);
      const double im = normal(rng);
      g(r, c) = {re, im};
    }
  Eigen::HouseholderQR<Eigen::MatrixXcd> qr(g);
  Eigen::MatrixXcd q = qr.householderQ() * Eigen::MatrixXcd::Identity(tau, tau);
  const auto& packed = qr.matrixQR();
  for (int k = 0; k < tau; ++k) {
    const std::complex<double> d = packed(k, k);
    if (std::abs(d) > 0) q.col(k) *= d / std::abs(d);
  }
  return q;
}

Eigen::MatrixXd sample_orthogonal(int tau, std::mt19937_64& rng) {
  std::normal_distribution<double> normal(0.0, 1.0);
  Eigen::MatrixXd g(tau, tau);
  for (int c = 0; c < tau; ++c)
    for (int r = 0; r < tau; ++r) g(r, c) = normal(rng);
  Eigen::HouseholderQR<Eigen::MatrixXd> qr(g);
  Eigen::MatrixXd q = qr.householderQ() * Eigen::MatrixXd::Identity(tau, tau);
  const auto& packed = qr.matrixQR();
  for (int k = 0; k < tau; ++k)
    if (packed(k, k) < 0) q.col(k) = -q.col(k);
  return q;
}

Eigen::MatrixXcd sample_haar(Group group, int tau, std::uint64_t seed) {
  if (tau < 1) throw DomainError("sample_haar: tau must be >= 1");
  std::mt19937_64 rng(splitmix64(seed));
  if (group == Group::unitary) return sample_unitary(tau, rng);
  return sample_orthogonal(tau, rng).cast<std::complex<double>>();
}

double unitarity_defect(const Eigen::MatrixXcd& m) {
  const Eigen::MatrixXcd d = m.adjoint() * m - Eigen::MatrixXcd::Identity(m.rows(), m.cols());
  return d.cwiseAbs().maxCoeff();
}

void validate_moment(Group group, int tau, const MomentIndices& idx) {
  if (tau < 1) throw DomainError("tau must be a positive integer");
  auto check = [tau](const std::vector<int>& v) {
    for (int x : v)
      if (x < 1 || x > tau) throw DomainError("moment index " + std::to_string(x) + " outside 1.." + std::to_string(tau));
  };
  check(idx.i);
  check(idx.j);
  check(idx.i_conj);
  check(idx.j_conj);
  if (idx.i.size() != idx.j.size()) throw DomainError("moment indices: i and j differ in length");
  if (idx.i_conj.size() != idx.j_conj.size()) throw DomainError("moment indices: i' and j' differ in length");
  if (group == Group::orthogonal && !idx.i_conj.empty())
    throw DomainError("moment indices: orthogonal moments take no conjugated factors");
}

Rational MomentPredictor::predict(Group group, int tau, const MomentIndices& idx) {
  validate_moment(group, tau, idx);
  if (group == Group::unitary) {
    const std::size_t n = idx.i.size();
    if (idx.i_conj.size() != n) return Rational(0);  // phase invariance
    if (n == 0) return Rational(1);
    auto key = std::make_pair(static_cast<int>(n), tau);
    auto it = unitary_.find(key);
    if (it == unitary_.end()) {
      std::map<Partition, Rational> values;
      for (const auto& mu : partitions_of(static_cast<int>(n)))
        values.emplace(mu, wg_function_unitary(mu, Rational(tau)));
      it = unitary_.emplace(key, std::move(values)).first;
    }
    const auto perms = all_permutations(n);
    auto matches = [&](const std::vector<int>& a, const std::vector<int>& b) {
      std::vector<Permutation> out;
      for (const auto& s : perms) {
        bool ok = true;
        for (std::size_t k = 0; k < n && ok; ++k) ok = a[k] == b[static_cast<std::size_t>(s.at0(k))];
        if (ok) out.push_back(s);
      }
      return out;
    };
    Rational total(0);
    const auto sigmas = matches(idx.i, idx.i_conj);
    const auto rhos = matches(idx.j, idx.j_conj);
    for (const auto& s : sigmas)
      for (const auto& r : rhos) total += it->second.at(compose(s, r.inverse()).cycle_type());
    return total;
  }

  const std::size_t degree = idx.i.size();
  if (degree % 2 == 1) return Rational(0);
  if (degree == 0) return Rational(1);
  const int n = static_cast<int>(degree / 2);
  auto key = std::make_pair(n, tau);
  auto it = orthogonal_.find(key);
  if (it == orthogonal_.end()) {
    auto table = weingarten_orthogonal(n, Rational(tau));
    it = orthogonal_.emplace(key, std::make_pair(std::move(table.basis), std::move(table.weingarten))).first;
  }
  const auto& [basis, w] = it->second;
  auto respects = [](const Pairing& pi, const std::vector<int>& v) {
    for (auto [a, b] : pi.pairs())
      if (v[static_cast<std::size_t>(a - 1)] != v[static_cast<std::size_t>(b - 1)]) return false;
    return true;
  };
  std::vector<std::size_t> rows, cols;
  for (std::size_t k = 0; k < basis.size(); ++k) {
    if (respects(basis[k], idx.i)) rows.push_back(k);
    if (respects(basis[k], idx.j)) cols.push_back(k);
  }
  Rational total(0);
  for (auto a : rows)
    for (auto b : cols) total += w(a, b);
  return total;
}

Rational predict_moment(const MomentSpec& spec) {
  MomentPredictor p;
  return p.predict(spec.group, spec.tau, spec.indices);
}

std::vector<MomentReport> estimate_moments(Group group, int tau, const std::vector<MomentIndices>& moments,
                                           std::uint64_t samples, std::uint64_t seed, unsigned threads) {
  if (samples < 100) throw DomainError("estimate_moments: need at least 100 samples");
  for (const auto& m : moments) validate_moment(group, tau, m);

  // Flattened 0-based entry offsets (column-major) per moment.
  struct Flat {
    std::vector<int> plain, conj;
  };
  std::vector<Flat> flat;
  for (const auto& m : moments) {
    Flat f;
    for (std::size_t k = 0; k < m.i.size(); ++k) f.plain.push_back((m.i[k] - 1) + tau * (m.j[k] - 1));
    for (std::size_t k = 0; k < m.i_conj.size(); ++k) f.conj.push_back((m.i_conj[k] - 1) + tau * (m.j_conj[k] - 1));
    flat.push_back(std::move(f));
  }

  std::vector<ChunkStats> chunks(kChunks, ChunkStats(moments.size()));
  auto run_chunk = [&](std::size_t c) {
    const std::uint64_t count = samples / kChunks + (c < samples % kChunks ? 1 : 0);
    std::mt19937_64 rng(splitmix64(seed + kGolden * (c + 1)));
    auto& stats = chunks[c];
    for (std::uint64_t s = 0; s < count; ++s) {
      if (group == Group::unitary) {
        const Eigen::MatrixXcd u = sample_unitary(tau, rng);
        const std::complex<double>* d = u.data();
        for (std::size_t k = 0; k < flat.size(); ++k) {
          std::complex<double> v(1.0, 0.0);
          for (int p : flat[k].plain) v *= d[p];
          for (int p : flat[k].conj) v *= std::conj(d[p]);
          stats[k].first.push(v.real());
          stats[k].second.push(v.imag());
        }
      } else {
        const Eigen::MatrixXd o = sample_orthogonal(tau, rng);
        const double* d = o.data();
        for (std::size_t k = 0; k < flat.size(); ++k) {
          double v = 1.0;
          for (int p : flat[k].plain) v *= d[p];
          stats[k].first.push(v);
          stats[k].second.push(0.0);
        }
      }
    }
  };

  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = std::min<unsigned>(threads, kChunks);
  if (threads == 1) {
    for (std::size_t c = 0; c < kChunks; ++c) run_chunk(c);
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t)
      pool.emplace_back([&] {
        for (std::size_t c = next++; c < kChunks; c = next++) run_chunk(c);
      });
    for (auto& th : pool) th.join();
  }

  const ChunkStats total = merge_tree(chunks, 0, kChunks);
  MomentPredictor predictor;
  std::vector<MomentReport> out;
  out.reserve(moments.size());
  for (std::size_t k = 0; k < moments.size(); ++k) {
    MomentReport r;
    r.spec = {group, tau, moments[k], samples, seed};
    r.exact = predictor.predict(group, tau, moments[k]);
    r.estimate = total[k].first.mean;
    r.stderr_ = total[k].first.stderr_of_mean();
    r.z = z_score(r.estimate, r.stderr_, r.exact.to_double());
    r.estimate_imag = total[k].second.mean;
    r.stderr_imag = total[k].second.stderr_of_mean();
    r.z_imag = z_score(r.estimate_imag, r.stderr_imag, 0.0);
    out.push_back(std::move(r));
  }
  return out;
}

MomentReport estimate_moment(const MomentSpec& spec, unsigned threads) {
  return estimate_moments(spec.group, spec.tau, {spec.indices}, spec.samples, spec.seed, threads).front();
}

std::vector<MomentIndices> moment_grid(Group group, int tau, int n) {
  if (tau < 1 || n < 1) throw DomainError("moment_grid: tau and n must be positive");
  std::vector<std::vector<int>> sets;
  std::vector<int> cur;
  multisets(tau * tau, group == Group::unitary ? n : 2 * n, cur, sets);
  auto split = [tau](const std::vector<int>& positions, std::vector<int>& rows, std::vector<int>& cols) {
    for (int p : positions) {
      rows.push_back(p / tau + 1);
      cols.push_back(p % tau + 1);
    }
  };
  std::vector<MomentIndices> out;
  if (group == Group::orthogonal) {
    for (const auto& s : sets) {
      MomentIndices m;
      split(s, m.i, m.j);
      out.push_back(std::move(m));
    }
    return out;
  }
  for (const auto& a : sets)
    for (const auto& b : sets) {
      MomentIndices m;
      split(a, m.i, m.j);
      split(b, m.i_conj, m.j_conj);
      out.push_back(std::move(m));
    }
  return out;
}

}  // namespace wg
