#pragma once

#include <algorithm>
#include <ostream>
#include <string>
#include <vector>

namespace wg {

/// Outcome of an exact identity check. Failures are recorded, never thrown.
struct Check {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct Report {
  std::string title;
  std::vector<Check> checks;

  void add(std::string name, bool ok, std::string detail = {}) {
    checks.push_back({std::move(name), ok, std::move(detail)});
  }
  void merge(const Report& other) {
    for (const auto& c : other.checks) checks.push_back({other.title + ": " + c.name, c.passed, c.detail});
  }
  bool passed() const {
    return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.passed; });
  }
};

inline std::ostream& operator<<(std::ostream& os, const Report& r) {
  os << (r.passed() ? "PASS " : "FAIL ") << r.title << '\n';
  for (const auto& c : r.checks) {
    os << "  [" << (c.passed ? "ok" : "FAILED") << "] " << c.name;
    if (!c.detail.empty()) os << " (" << c.detail << ")";
    os << '\n';
  }
  return os;
}

}  // namespace wg
