#pragma once

// Serialization: Weingarten tables as JSON, Gram/Weingarten matrices as CSV,
// algebra elements, Monte-Carlo reports, and the on-disk character cache.

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "wg/groupalg.hpp"
#include "wg/haar_mc.hpp"
#include "wg/matrix.hpp"
#include "wg/wg_orthogonal.hpp"
#include "wg/wg_unitary.hpp"
#include "wg/young.hpp"

namespace wg::io {

using Json = nlohmann::ordered_json;

inline std::string tau_label(const Rational& tau) { return tau.str(); }
inline std::string tau_label(const TauRational&) { return "symbolic"; }

template <CoefficientRing R>
Json matrix_json(const Matrix<R>& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(render(m(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

template <class Label>
Json labels_json(const std::vector<Label>& basis) {
  Json out = Json::array();
  for (const auto& b : basis) out.push_back(b.str());
  return out;
}

inline Json partitions_json(const std::vector<Partition>& parts) { return labels_json(parts); }

template <CoefficientRing R>
Json table_json(const WeingartenTableU<R>& t) {
  return Json{{"group", "unitary"},
              {"n", t.n},
              {"tau", tau_label(t.tau)},
              {"basis", labels_json(t.basis)},
              {"gram", matrix_json(t.gram)},
              {"weingarten", matrix_json(t.weingarten)},
              {"excluded", partitions_json(t.excluded)}};
}

template <CoefficientRing R>
Json table_json(const WeingartenTableO<R>& t) {
  return Json{{"group", "orthogonal"},
              {"n", t.n},
              {"tau", tau_label(t.tau)},
              {"basis", labels_json(t.basis)},
              {"gram", matrix_json(t.gram)},
              {"weingarten", matrix_json(t.weingarten)},
              {"excluded", partitions_json(t.excluded)}};
}

template <CoefficientRing R>
Json algebra_json(const AlgebraElement<R>& a) {
  Json out = Json::object();
  for (const auto& [perm, coeff] : a.terms()) out[perm.str()] = render(coeff);
  return out;
}

/// A table read back from JSON; entries parse as rational functions of t.
struct ParsedTable {
  std::string group;
  int n = 0;
  std::string tau;
  std::vector<std::string> basis;
  Matrix<TauRational> gram;
  Matrix<TauRational> weingarten;
  std::vector<Partition> excluded;
};

/// Throws DomainError on a malformed document.
ParsedTable parse_table_json(const std::string& text);

Matrix<TauRational> parse_matrix_json(const Json& rows);

/// RFC 4180: every cell quoted, CRLF line ends. Header row is an empty cell
/// followed by the basis labels; each row starts with its label.
template <CoefficientRing R, class Label>
std::string matrix_csv(const std::vector<Label>& basis, const Matrix<R>& m);

std::string csv_quote(const std::string& cell);
std::vector<std::vector<std::string>> parse_csv(const std::string& text);

struct LabelledMatrix {
  std::vector<std::string> labels;
  Matrix<TauRational> matrix;
};

/// Inverse of matrix_csv.
LabelledMatrix parse_matrix_csv(const std::string& text);

Json moment_report_json(const MomentReport& r);

// Character cache. Files are named characters-<n>.json and carry
// "schema": "wg-characters/1"; anything else is ignored on load.

inline constexpr const char* kCharacterSchema = "wg-characters/1";

Json character_table_json(const CharacterTable& t);
/// Throws DomainError for a wrong schema tag or inconsistent content.
CharacterTable character_table_from_json(const Json& j);

/// $WG_CACHE_DIR, else $XDG_CACHE_HOME/wgcalc, else ~/.cache/wgcalc.
std::filesystem::path cache_dir();
std::filesystem::path character_cache_path(int n);

/// nullopt when the file is missing or does not validate.
std::optional<CharacterTable> load_character_cache(int n);
/// Returns false if the file could not be written.
bool save_character_cache(const CharacterTable& t);

/// Loads the cached table for n (computing and saving it on a miss) and
/// installs it into the character memo.
CharacterTable ensure_characters(int n, bool refresh = false);

template <CoefficientRing R, class Label>
std::string matrix_csv(const std::vector<Label>& basis, const Matrix<R>& m) {
  std::string out = csv_quote("");
  for (const auto& b : basis) out += "," + csv_quote(b.str());
  out += "\r\n";
  for (std::size_t i = 0; i < m.rows(); ++i) {
    out += csv_quote(basis[i].str());
    for (std::size_t j = 0; j < m.cols(); ++j) out += "," + csv_quote(render(m(i, j)));
    out += "\r\n";
  }
  return out;
}

}  // namespace wg::io
