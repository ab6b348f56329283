#pragma once

// Named verification suites, as run by `wgcalc verify`.

#include <optional>
#include <string>
#include <vector>

#include "wg/coeffring.hpp"
#include "wg/io.hpp"
#include "wg/report.hpp"

namespace wg {

struct SuiteOptions {
  int n = 3;
  std::optional<Rational> tau;  // symbolic when empty
  bool deep = false;            // doubling at 2n = 8
  std::optional<io::ParsedTable> table;  // pseudoinverse suite checks this table instead
};

const std::vector<std::string>& suite_names();  // without "all"

/// Runs a suite (or "all") at every size 1..n; throws DomainError for an
/// unknown name.
std::vector<Report> run_suite(const std::string& name, const SuiteOptions& options);

/// Pseudo-inverse contract for a table read from disk, plus agreement of its
/// Gram matrix with a freshly computed one.
Report check_table(const io::ParsedTable& table);

}  // namespace wg
