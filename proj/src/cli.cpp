#include "wg/cli.hpp"

#include <cmath>
#include <fstream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "wg/errors.hpp"
#include "wg/haar_mc.hpp"
#include "wg/io.hpp"
#include "wg/suites.hpp"
#include "wg/wg_orthogonal.hpp"
#include "wg/wg_unitary.hpp"

namespace wg::cli {

namespace {

// Raised for bad flag values found after parsing; always names the flag.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

constexpr int kUnitaryCap = 5;
constexpr int kOrthogonalSymbolicCap = 4;
constexpr int kOrthogonalNumericCap = 5;
constexpr int kVerifyCap = 4;
constexpr int kCharactersCap = 12;
constexpr int kHardLimit = 20;

struct Common {
  std::string group;
  int n = 0;
  std::string tau = "symbolic";
  std::string format = "json";
  std::string out_file;
  bool force = false;
};

std::optional<Rational> parse_tau(const std::string& text, bool allow_symbolic) {
  if (allow_symbolic && text == "symbolic") return std::nullopt;
  try {
    return Rational::parse(text);
  } catch (const std::exception& e) {
    throw UsageError(std::string("--tau: ") + e.what());
  }
}

void check_cap(const char* flag, int n, int cap, bool force, const std::string& what) {
  if (n < 1) throw UsageError(std::string(flag) + ": must be >= 1");
  if (n > kHardLimit) throw UsageError(std::string(flag) + ": " + std::to_string(n) + " exceeds the hard limit " + std::to_string(kHardLimit));
  if (n > cap && !force)
    throw UsageError(std::string(flag) + ": " + std::to_string(n) + " exceeds the " + what + " cap of " + std::to_string(cap) +
                     " (use --force to override)");
}

void check_table_cap(const Common& c, bool symbolic) {
  if (c.group == "unitary")
    check_cap("--n", c.n, kUnitaryCap, c.force, "unitary");
  else if (symbolic)
    check_cap("--n", c.n, kOrthogonalSymbolicCap, c.force, "symbolic orthogonal");
  else
    check_cap("--n", c.n, kOrthogonalNumericCap, c.force, "numeric orthogonal");
}

void emit(const std::string& text, const std::string& file, std::ostream& out) {
  if (file.empty()) {
    out << text;
    return;
  }
  std::ofstream f(file, std::ios::binary | std::ios::trunc);
  if (!f) throw UsageError("--out: cannot open '" + file + "' for writing");
  f << text;
}

std::string read_file(const std::string& flag, const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError(flag + ": cannot read '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

template <class Table>
std::string render_table(const Table& t, const std::string& format, const std::string& matrix) {
  if (format == "csv") return io::matrix_csv(t.basis, matrix == "gram" ? t.gram : t.weingarten);
  return io::table_json(t).dump(2) + "\n";
}

template <CoefficientRing R>
std::string table_text(const Common& c, const R& tau, const std::string& matrix) {
  if (c.group == "unitary") return render_table(weingarten_unitary(c.n, tau), c.format, matrix);
  io::ensure_characters(2 * c.n);
  return render_table(weingarten_orthogonal(c.n, tau), c.format, matrix);
}

template <CoefficientRing R>
std::string gram_text(const Common& c, const R& tau) {
  auto render = [&](const auto& basis, const Matrix<R>& g) {
    if (c.format == "csv") return io::matrix_csv(basis, g);
    io::Json j{{"group", c.group},
               {"n", c.n},
               {"tau", io::tau_label(tau)},
               {"basis", io::labels_json(basis)},
               {"gram", io::matrix_json(g)}};
    return j.dump(2) + "\n";
  };
  if (c.group == "unitary") return render(all_permutations(static_cast<std::size_t>(c.n)), gram_unitary(c.n, tau));
  return render(enumerate_pairings(c.n), gram_orthogonal(c.n, tau));
}

void add_common(CLI::App* sub, Common& c, bool with_format) {
  sub->add_option("--group", c.group, "unitary or orthogonal")
      ->required()
      ->check(CLI::IsMember({"unitary", "orthogonal"}));
  sub->add_option("--n", c.n, "degree")->required();
  sub->add_option("--tau", c.tau, "symbolic or a rational P/Q")->capture_default_str();
  if (with_format) {
    sub->add_option("--format", c.format, "json or csv")->check(CLI::IsMember({"json", "csv"}))->capture_default_str();
    sub->add_option("--out", c.out_file, "write to FILE instead of stdout");
  }
  sub->add_flag("--force", c.force, "lift the default size caps");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact Weingarten matrices for the unitary and orthogonal groups", "wgcalc"};
  app.require_subcommand(1);

  Common table_opts;
  std::string matrix = "weingarten";
  auto* table = app.add_subcommand("table", "Gram and Weingarten matrices as one table");
  add_common(table, table_opts, true);
  table->add_option("--matrix", matrix, "matrix written in csv format")
      ->check(CLI::IsMember({"weingarten", "gram"}))
      ->capture_default_str();

  Common gram_opts;
  auto* gram = app.add_subcommand("gram", "Gram matrix only");
  add_common(gram, gram_opts, true);

  std::string wg_group, cycle_type, wg_tau;
  bool wg_force = false;
  auto* wgfn = app.add_subcommand("wgfn", "one value of the unitary Weingarten class function");
  wgfn->add_option("--group", wg_group, "unitary")->required();
  wgfn->add_option("--cycle-type", cycle_type, "partition such as [2,1]")->required();
  wgfn->add_option("--tau", wg_tau, "symbolic or a rational P/Q")->required();
  wgfn->add_flag("--force", wg_force, "lift the default size cap");

  int char_n = 0;
  bool refresh = false, char_force = false;
  auto* characters = app.add_subcommand("characters", "character table of S_n (cached)");
  characters->add_option("--n", char_n, "n")->required();
  characters->add_flag("--refresh", refresh, "recompute even when a cached table exists");
  characters->add_flag("--force", char_force, "lift the default size cap");

  std::string suite, verify_tau, table_file;
  int verify_n = 3;
  bool deep = false, verify_force = false;
  std::vector<std::string> suites = suite_names();
  suites.push_back("all");
  auto* verify = app.add_subcommand("verify", "run exact verification suites");
  verify->add_option("--suite", suite, "suite name")->required()->check(CLI::IsMember(suites));
  verify->add_option("--n", verify_n, "largest size checked")->capture_default_str();
  verify->add_option("--tau", verify_tau, "rational P/Q (default symbolic)");
  verify->add_flag("--deep", deep, "include the 2n = 8 doubling check");
  verify->add_option("--table", table_file, "pseudoinverse suite: check this JSON table");
  verify->add_flag("--force", verify_force, "lift the default size cap");

  std::string mc_group, indices;
  int mc_n = 2, mc_tau = 0;
  std::uint64_t samples = 200000, seed = 1;
  unsigned threads = 0;
  double threshold = 4.0;
  bool summary = false, mc_force = false;
  auto* mc = app.add_subcommand("mc", "Monte-Carlo check of Haar moments against exact predictions");
  mc->add_option("--group", mc_group, "unitary or orthogonal")
      ->required()
      ->check(CLI::IsMember({"unitary", "orthogonal"}));
  mc->add_option("--n", mc_n, "moment degree (orthogonal: half the number of factors)")->capture_default_str();
  mc->add_option("--tau", mc_tau, "matrix size")->required();
  mc->add_option("--samples", samples, "number of samples")->capture_default_str();
  mc->add_option("--seed", seed, "random seed")->capture_default_str();
  mc->add_option("--indices", indices, "one moment: \"i;j;i';j'\" (unitary) or \"i;j\" (orthogonal), comma lists");
  mc->add_option("--threads", threads, "worker threads, 0 = all cores")->capture_default_str();
  mc->add_option("--threshold", threshold, "pass when every |z| is at most this")->capture_default_str();
  mc->add_flag("--summary", summary, "omit per-moment reports from the grid output");
  mc->add_flag("--force", mc_force, "lift the default size caps");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }

  try {
    if (table->parsed()) {
      const auto tau = parse_tau(table_opts.tau, true);
      check_table_cap(table_opts, !tau);
      const std::string text =
          tau ? table_text(table_opts, *tau, matrix) : table_text(table_opts, TauRational::tau(), matrix);
      emit(text, table_opts.out_file, out);
    } else if (gram->parsed()) {
      const auto tau = parse_tau(gram_opts.tau, true);
      check_table_cap(gram_opts, !tau);
      emit(tau ? gram_text(gram_opts, *tau) : gram_text(gram_opts, TauRational::tau()), gram_opts.out_file, out);
    } else if (wgfn->parsed()) {
      if (wg_group != "unitary") throw UsageError("--group: wgfn is defined for the unitary group only");
      Partition mu;
      try {
        mu = Partition::parse(cycle_type);
      } catch (const std::exception& e) {
        throw UsageError(std::string("--cycle-type: ") + e.what());
      }
      check_cap("--cycle-type", mu.weight(), kUnitaryCap, wg_force, "unitary");
      const auto tau = parse_tau(wg_tau, true);
      out << (tau ? render(wg_function_unitary(mu, *tau)) : render(wg_function_unitary(mu, TauRational::tau())))
          << '\n';
    } else if (characters->parsed()) {
      check_cap("--n", char_n, kCharactersCap, char_force, "character table");
      out << io::character_table_json(io::ensure_characters(char_n, refresh)).dump() << '\n';
    } else if (verify->parsed()) {
      check_cap("--n", verify_n, kVerifyCap, verify_force, "verify");
      SuiteOptions options;
      options.n = verify_n;
      options.deep = deep;
      if (!verify_tau.empty()) options.tau = parse_tau(verify_tau, false);
      if (!table_file.empty()) {
        if (suite != "pseudoinverse") throw UsageError("--table: only valid with --suite pseudoinverse");
        try {
          options.table = io::parse_table_json(read_file("--table", table_file));
        } catch (const DomainError& e) {
          throw UsageError(std::string("--table: ") + e.what());
        }
      }
      const auto reports = run_suite(suite, options);
      std::size_t failed = 0, total = 0;
      for (const auto& r : reports) {
        out << r;
        for (const auto& c : r.checks) {
          ++total;
          if (!c.passed) ++failed;
        }
      }
      if (failed == 0) {
        out << "all " << total << " checks passed\n";
        return kOk;
      }
      out << failed << " of " << total << " checks failed\n";
      return kFailed;
    } else if (mc->parsed()) {
      const Group group = parse_group(mc_group);
      if (mc_tau < 1) throw UsageError("--tau: must be a positive integer");
      if (samples < 100) throw UsageError("--samples: must be at least 100");
      const int cap = group == Group::unitary ? kUnitaryCap : kOrthogonalNumericCap;
      if (!indices.empty()) {
        MomentSpec spec;
        spec.group = group;
        spec.tau = mc_tau;
        spec.samples = samples;
        spec.seed = seed;
        try {
          spec.indices = MomentIndices::parse(indices, group);
          validate_moment(group, mc_tau, spec.indices);
        } catch (const DomainError& e) {
          throw UsageError(std::string("--indices: ") + e.what());
        }
        const int degree = static_cast<int>(group == Group::unitary ? spec.indices.i.size() : spec.indices.i.size() / 2);
        if (degree > 0) check_cap("--indices", degree, cap, mc_force, group_name(group));
        if (group == Group::orthogonal && degree > 0) io::ensure_characters(2 * degree);
        const MomentReport r = estimate_moment(spec, threads);
        out << io::moment_report_json(r).dump(2) << '\n';
        return r.max_abs_z() <= threshold ? kOk : kFailed;
      }
      check_cap("--n", mc_n, cap, mc_force, group_name(group));
      if (group == Group::orthogonal) io::ensure_characters(2 * mc_n);
      const auto grid = moment_grid(group, mc_tau, mc_n);
      const auto reports = estimate_moments(group, mc_tau, grid, samples, seed, threads);
      const std::size_t tests = reports.size() * (group == Group::unitary ? 2 : 1);
      io::Json failures = io::Json::array(), all = io::Json::array();
      double max_z = 0;
      for (const auto& r : reports) {
        max_z = std::max(max_z, r.max_abs_z());
        if (r.max_abs_z() > threshold) failures.push_back(io::moment_report_json(r));
        if (!summary) all.push_back(io::moment_report_json(r));
      }
      io::Json doc{{"group", group_name(group)},
                   {"n", mc_n},
                   {"tau", mc_tau},
                   {"samples", samples},
                   {"seed", seed},
                   {"threshold", threshold},
                   {"moments", reports.size()},
                   {"z_tests", tests},
                   {"expected_false_failures", static_cast<double>(tests) * normal_tail(threshold)},
                   {"max_abs_z", max_z},
                   {"failures", failures}};
      if (!summary) doc["reports"] = std::move(all);
      out << doc.dump(2) << '\n';
      return failures.empty() ? kOk : kFailed;
    }
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const PoleError& e) {
    err << "error: " << e.what() << '\n';
    return kDomain;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return kDomain;
  } catch (const ArithmeticError& e) {
    err << "error: " << e.what() << '\n';
    return kDomain;
  }
  return kOk;
}

}  // namespace wg::cli
