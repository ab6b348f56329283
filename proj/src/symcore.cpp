#include "wg/symcore.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "text_scan.hpp"

namespace wg {

// ---------------------------------------------------------------- Partition

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  if (parts_.empty()) throw DomainError("partition must have at least one part");
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] <= 0) throw DomainError("partition parts must be positive");
    if (i > 0 && parts_[i] > parts_[i - 1])
      throw DomainError("partition parts must be weakly decreasing");
    weight_ += parts_[i];
  }
}

Partition Partition::conjugate() const {
  std::vector<int> out(static_cast<std::size_t>(parts_.front()), 0);
  for (int p : parts_)
    for (int j = 0; j < p; ++j) ++out[static_cast<std::size_t>(j)];
  return Partition(std::move(out));
}

std::string Partition::str() const {
  std::string s = "[";
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(parts_[i]);
  }
  return s + "]";
}

Partition Partition::parse(std::string_view text) {
  detail::TextScanner sc(text, "partition");
  auto parts = sc.int_list('[', ']');
  sc.finish();
  return Partition(std::move(parts));
}

// -------------------------------------------------------------- Permutation

Permutation::Permutation(std::size_t n) {
  if (n > kMaxDegree) throw DomainError("permutation degree exceeds " + std::to_string(kMaxDegree));
  size_ = static_cast<std::uint8_t>(n);
  for (std::size_t i = 0; i < n; ++i) img_[i] = static_cast<std::uint8_t>(i);
}

Permutation Permutation::from_images(std::span<const int> images) {
  const std::size_t n = images.size();
  if (n > kMaxDegree) throw DomainError("permutation degree exceeds " + std::to_string(kMaxDegree));
  Permutation p;
  p.size_ = static_cast<std::uint8_t>(n);
  std::array<bool, kMaxDegree> seen{};
  for (std::size_t i = 0; i < n; ++i) {
    int v = images[i];
    if (v < 1 || static_cast<std::size_t>(v) > n || seen[static_cast<std::size_t>(v - 1)])
      throw DomainError("not a bijection of {1,...," + std::to_string(n) + "}");
    seen[static_cast<std::size_t>(v - 1)] = true;
    p.img_[i] = static_cast<std::uint8_t>(v - 1);
  }
  return p;
}

Permutation Permutation::transposition(std::size_t n, int i, int j) {
  if (i == j || i < 1 || j < 1 || static_cast<std::size_t>(i) > n || static_cast<std::size_t>(j) > n)
    throw DomainError("invalid transposition");
  Permutation p(n);
  std::swap(p.img_[static_cast<std::size_t>(i - 1)], p.img_[static_cast<std::size_t>(j - 1)]);
  return p;
}

std::vector<int> Permutation::images() const {
  std::vector<int> out(size_);
  for (std::size_t i = 0; i < size_; ++i) out[i] = img_[i] + 1;
  return out;
}

bool Permutation::is_identity() const {
  for (std::size_t i = 0; i < size_; ++i)
    if (img_[i] != i) return false;
  return true;
}

Permutation Permutation::inverse() const {
  Permutation p;
  p.size_ = size_;
  for (std::size_t i = 0; i < size_; ++i) p.img_[img_[i]] = static_cast<std::uint8_t>(i);
  return p;
}

Permutation Permutation::embed(std::size_t m) const {
  if (m < size_) throw DomainError("cannot embed permutation into a smaller symmetric group");
  if (m > kMaxDegree) throw DomainError("permutation degree exceeds " + std::to_string(kMaxDegree));
  Permutation p = *this;
  for (std::size_t i = size_; i < m; ++i) p.img_[i] = static_cast<std::uint8_t>(i);
  p.size_ = static_cast<std::uint8_t>(m);
  return p;
}

Partition Permutation::cycle_type() const {
  std::array<bool, kMaxDegree> seen{};
  std::vector<int> lengths;
  for (std::size_t i = 0; i < size_; ++i) {
    if (seen[i]) continue;
    int len = 0;
    for (std::size_t j = i; !seen[j]; j = img_[j]) {
      seen[j] = true;
      ++len;
    }
    lengths.push_back(len);
  }
  std::sort(lengths.begin(), lengths.end(), std::greater<>());
  return Partition(std::move(lengths));
}

int Permutation::num_cycles() const {
  std::array<bool, kMaxDegree> seen{};
  int cycles = 0;
  for (std::size_t i = 0; i < size_; ++i) {
    if (seen[i]) continue;
    ++cycles;
    for (std::size_t j = i; !seen[j]; j = img_[j]) seen[j] = true;
  }
  return cycles;
}

int Permutation::sign() const { return ((size_ - num_cycles()) % 2 == 0) ? 1 : -1; }

std::string Permutation::str() const {
  std::string s = "[";
  for (std::size_t i = 0; i < size_; ++i) {
    if (i) s += ',';
    s += std::to_string(img_[i] + 1);
  }
  return s + "]";
}

Permutation Permutation::parse(std::string_view text) {
  detail::TextScanner sc(text, "permutation");
  auto images = sc.int_list('[', ']');
  sc.finish();
  return from_images(images);
}

std::size_t Permutation::hash() const {
  std::size_t h = size_;
  for (std::size_t i = 0; i < size_; ++i) h = h * 131 + img_[i];
  return h;
}

Permutation compose(const Permutation& outer, const Permutation& inner) {
  if (outer.size_ != inner.size_) throw DomainError("compose: permutation sizes differ");
  Permutation p;
  p.size_ = outer.size_;
  for (std::size_t i = 0; i < p.size_; ++i) p.img_[i] = outer.img_[inner.img_[i]];
  return p;
}

Permutation conjugate(const Permutation& g, const Permutation& x) {
  return compose(compose(g, x), g.inverse());
}

std::vector<Permutation> all_permutations(std::size_t n) {
  std::vector<int> images(n);
  std::iota(images.begin(), images.end(), 1);
  std::vector<Permutation> out;
  out.reserve(factorial(static_cast<int>(n)));
  do {
    out.push_back(Permutation::from_images(images));
  } while (std::next_permutation(images.begin(), images.end()));
  return out;
}

std::size_t permutation_rank(const Permutation& sigma) {
  const std::size_t n = sigma.size();
  std::size_t rank = 0;
  for (std::size_t i = 0; i < n; ++i) {
    std::size_t smaller = 0;
    for (std::size_t j = i + 1; j < n; ++j)
      if (sigma.at0(j) < sigma.at0(i)) ++smaller;
    rank = rank * (n - i) + smaller;
  }
  return rank;
}

// ---------------------------------------------------------- StandardTableau

StandardTableau::StandardTableau(std::vector<std::vector<int>> rows) : rows_(std::move(rows)) {
  std::vector<int> parts;
  for (const auto& r : rows_) parts.push_back(static_cast<int>(r.size()));
  shape_ = Partition(parts);  // validates shape
  const int n = shape_.weight();
  std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    for (std::size_t j = 0; j < rows_[i].size(); ++j) {
      int v = rows_[i][j];
      if (v < 1 || v > n || seen[static_cast<std::size_t>(v)])
        throw DomainError("tableau entries must be exactly 1..n");
      seen[static_cast<std::size_t>(v)] = true;
      if (j > 0 && rows_[i][j - 1] >= v) throw DomainError("tableau rows must increase");
      if (i > 0 && rows_[i - 1][j] >= v) throw DomainError("tableau columns must increase");
    }
  }
}

std::pair<int, int> StandardTableau::position(int k) const {
  for (std::size_t i = 0; i < rows_.size(); ++i)
    for (std::size_t j = 0; j < rows_[i].size(); ++j)
      if (rows_[i][j] == k) return {static_cast<int>(i) + 1, static_cast<int>(j) + 1};
  throw DomainError("label " + std::to_string(k) + " not in tableau of size " +
                    std::to_string(size()));
}

int StandardTableau::content(int k) const {
  auto [i, j] = position(k);
  return j - i;
}

StandardTableau StandardTableau::without_last() const {
  if (size() < 2) throw DomainError("cannot remove the only box of a tableau");
  auto rows = rows_;
  auto [i, j] = position(size());
  rows[static_cast<std::size_t>(i - 1)].pop_back();
  if (rows.back().empty()) rows.pop_back();
  return StandardTableau(std::move(rows));
}

std::vector<int> StandardTableau::reading_word() const {
  std::vector<int> w;
  for (const auto& r : rows_) w.insert(w.end(), r.begin(), r.end());
  return w;
}

std::string StandardTableau::str() const {
  std::string s = "[";
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    if (i) s += ',';
    s += '[';
    for (std::size_t j = 0; j < rows_[i].size(); ++j) {
      if (j) s += ',';
      s += std::to_string(rows_[i][j]);
    }
    s += ']';
  }
  return s + "]";
}

StandardTableau StandardTableau::parse(std::string_view text) {
  detail::TextScanner sc(text, "tableau");
  std::vector<std::vector<int>> rows;
  sc.expect('[');
  do {
    rows.push_back(sc.int_list('[', ']'));
  } while (sc.accept(','));
  sc.expect(']');
  sc.finish();
  return StandardTableau(std::move(rows));
}

// ------------------------------------------------------------------ Pairing

Pairing Pairing::from_pairs(const std::vector<std::pair<int, int>>& pairs) {
  const std::size_t m = 2 * pairs.size();
  if (m == 0) throw DomainError("pairing must have at least one pair");
  std::vector<int> images(m, 0);
  for (auto [a, b] : pairs) {
    if (a == b || a < 1 || b < 1 || static_cast<std::size_t>(a) > m ||
        static_cast<std::size_t>(b) > m || images[static_cast<std::size_t>(a - 1)] ||
        images[static_cast<std::size_t>(b - 1)])
      throw DomainError("pairs must cover 1..2n exactly once");
    images[static_cast<std::size_t>(a - 1)] = b;
    images[static_cast<std::size_t>(b - 1)] = a;
  }
  return Pairing(Permutation::from_images(images));
}

Pairing Pairing::from_permutation(const Permutation& p) {
  if (p.size() == 0 || p.size() % 2) throw DomainError("pairing needs an even positive number of points");
  for (int k = 1; k <= static_cast<int>(p.size()); ++k)
    if (p(k) == k || p(p(k)) != k) throw DomainError("not a fixed-point-free involution");
  return Pairing(p);
}

std::vector<std::pair<int, int>> Pairing::pairs() const {
  std::vector<std::pair<int, int>> out;
  for (int k = 1; k <= static_cast<int>(points()); ++k)
    if (k < partner(k)) out.emplace_back(k, partner(k));
  return out;
}

std::string Pairing::str() const {
  std::string s;
  for (auto [a, b] : pairs()) s += "(" + std::to_string(a) + "," + std::to_string(b) + ")";
  return s;
}

Pairing Pairing::parse(std::string_view text) {
  detail::TextScanner sc(text, "pairing");
  std::vector<std::pair<int, int>> pairs;
  while (!sc.done()) {
    auto p = sc.int_list('(', ')');
    if (p.size() != 2) sc.fail("each pair needs exactly two points");
    pairs.emplace_back(p[0], p[1]);
  }
  return from_pairs(pairs);
}

// -------------------------------------------------------------- enumeration

namespace {

void partitions_rec(int remaining, int max_part, std::vector<int>& cur, std::vector<Partition>& out) {
  if (remaining == 0) {
    out.emplace_back(cur);
    return;
  }
  for (int p = std::min(remaining, max_part); p >= 1; --p) {
    cur.push_back(p);
    partitions_rec(remaining - p, p, cur, out);
    cur.pop_back();
  }
}

// Fill labels n, n-1, ..., 1 by repeatedly removing corners.
void tableaux_rec(std::vector<int>& shape, int label, std::vector<std::vector<int>>& rows,
                  std::vector<StandardTableau>& out) {
  if (label == 0) {
    out.emplace_back(rows);
    return;
  }
  for (std::size_t i = 0; i < shape.size(); ++i) {
    if (shape[i] == 0) continue;
    bool corner = (i + 1 == shape.size()) || shape[i + 1] < shape[i];
    if (!corner) continue;
    --shape[i];
    rows[i][static_cast<std::size_t>(shape[i])] = label;
    tableaux_rec(shape, label - 1, rows, out);
    ++shape[i];
  }
}

void pairings_rec(std::vector<int>& partner, std::vector<Pairing>& out) {
  auto first = std::find(partner.begin(), partner.end(), 0);
  if (first == partner.end()) {
    out.push_back(Pairing::from_permutation(Permutation::from_images(partner)));
    return;
  }
  const int a = static_cast<int>(first - partner.begin()) + 1;
  for (int b = a + 1; b <= static_cast<int>(partner.size()); ++b) {
    if (partner[static_cast<std::size_t>(b - 1)]) continue;
    partner[static_cast<std::size_t>(a - 1)] = b;
    partner[static_cast<std::size_t>(b - 1)] = a;
    pairings_rec(partner, out);
    partner[static_cast<std::size_t>(a - 1)] = 0;
    partner[static_cast<std::size_t>(b - 1)] = 0;
  }
}

}  // namespace

std::vector<Partition> partitions_of(int n) {
  if (n < 1) throw DomainError("partitions_of: n must be >= 1");
  std::vector<Partition> out;
  std::vector<int> cur;
  partitions_rec(n, n, cur, out);
  return out;
}

std::vector<StandardTableau> standard_tableaux(const Partition& shape) {
  std::vector<int> sh = shape.parts();
  std::vector<std::vector<int>> rows;
  for (int p : sh) rows.emplace_back(static_cast<std::size_t>(p), 0);
  std::vector<StandardTableau> out;
  tableaux_rec(sh, shape.weight(), rows, out);
  std::sort(out.begin(), out.end(), [](const StandardTableau& a, const StandardTableau& b) {
    return a.reading_word() < b.reading_word();
  });
  return out;
}

std::vector<StandardTableau> all_standard_tableaux(int n) {
  std::vector<StandardTableau> out;
  for (const auto& lambda : partitions_of(n)) {
    auto ts = standard_tableaux(lambda);
    out.insert(out.end(), ts.begin(), ts.end());
  }
  return out;
}

std::uint64_t factorial(int n) {
  if (n < 0 || n > 20) throw DomainError("factorial out of 64-bit range");
  std::uint64_t f = 1;
  for (int k = 2; k <= n; ++k) f *= static_cast<std::uint64_t>(k);
  return f;
}

std::uint64_t double_factorial_odd(int n) {
  std::uint64_t f = 1;
  for (int k = 1; k <= n; ++k) f *= static_cast<std::uint64_t>(2 * k - 1);
  return f;
}

std::uint64_t hook_dimension(const Partition& lambda) {
  const Partition conj = lambda.conjugate();
  std::uint64_t hooks = 1;
  for (std::size_t i = 0; i < lambda.length(); ++i)
    for (int j = 0; j < lambda[i]; ++j)
      hooks *= static_cast<std::uint64_t>((lambda[i] - j - 1) + (conj[static_cast<std::size_t>(j)] - static_cast<int>(i) - 1) + 1);
  return factorial(lambda.weight()) / hooks;
}

std::vector<Pairing> enumerate_pairings(int n) {
  if (n < 1) throw DomainError("enumerate_pairings: n must be >= 1");
  std::vector<int> partner(static_cast<std::size_t>(2 * n), 0);
  std::vector<Pairing> out;
  pairings_rec(partner, out);
  return out;
}

int loop_count(const Pairing& a, const Pairing& b) {
  if (a.points() != b.points()) throw DomainError("loop_count: pairings on different point sets");
  return compose(a.as_permutation(), b.as_permutation()).num_cycles() / 2;
}

Partition double_shape(const Partition& lambda) {
  auto parts = lambda.parts();
  for (int& p : parts) p *= 2;
  return Partition(std::move(parts));
}

StandardTableau double_tableau(const StandardTableau& t) {
  std::vector<std::vector<int>> rows;
  for (const auto& r : t.rows()) {
    std::vector<int> row;
    for (int k : r) {
      row.push_back(2 * k - 1);
      row.push_back(2 * k);
    }
    rows.push_back(std::move(row));
  }
  return StandardTableau(std::move(rows));
}

}  // namespace wg
