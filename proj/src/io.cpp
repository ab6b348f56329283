#include "wg/io.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>

namespace wg::io {

namespace {

Json parse_document(const std::string& text, const char* what) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw DomainError(std::string("malformed ") + what + ": " + e.what());
  }
}

template <class T>
T field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw DomainError(std::string("missing field '") + key + "'");
  try {
    return j.at(key).get<T>();
  } catch (const nlohmann::json::exception&) {
    throw DomainError(std::string("field '") + key + "' has the wrong type");
  }
}

}  // namespace

Matrix<TauRational> parse_matrix_json(const Json& rows) {
  if (!rows.is_array()) throw DomainError("matrix must be an array of rows");
  const std::size_t n = rows.size();
  Matrix<TauRational> m(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    if (!rows[i].is_array() || rows[i].size() != n) throw DomainError("matrix must be square");
    for (std::size_t j = 0; j < n; ++j) {
      if (!rows[i][j].is_string()) throw DomainError("matrix entries must be strings");
      m(i, j) = TauRational::parse(rows[i][j].get<std::string>());
    }
  }
  return m;
}

ParsedTable parse_table_json(const std::string& text) {
  const Json j = parse_document(text, "table");
  ParsedTable t;
  t.group = field<std::string>(j, "group");
  if (t.group != "unitary" && t.group != "orthogonal") throw DomainError("unknown group '" + t.group + "'");
  t.n = field<int>(j, "n");
  t.tau = field<std::string>(j, "tau");
  t.basis = field<std::vector<std::string>>(j, "basis");
  t.gram = parse_matrix_json(j.at("gram"));
  t.weingarten = parse_matrix_json(j.at("weingarten"));
  for (const auto& p : field<std::vector<std::string>>(j, "excluded")) t.excluded.push_back(Partition::parse(p));
  if (t.gram.rows() != t.basis.size() || t.weingarten.rows() != t.basis.size())
    throw DomainError("matrix size does not match the basis");
  return t;
}

std::string csv_quote(const std::string& cell) {
  std::string out = "\"";
  for (char c : cell) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::vector<std::vector<std::string>> parse_csv(const std::string& text) {
  std::vector<std::vector<std::string>> rows;
  std::vector<std::string> row;
  std::string cell;
  bool quoted = false;
  bool any = false;  // the current row has content
  for (std::size_t k = 0; k < text.size(); ++k) {
    const char c = text[k];
    if (quoted) {
      if (c == '"') {
        if (k + 1 < text.size() && text[k + 1] == '"') {
          cell += '"';
          ++k;
        } else {
          quoted = false;
        }
      } else {
        cell += c;
      }
      continue;
    }
    if (c == '"') {
      quoted = true;
      any = true;
    } else if (c == ',') {
      row.push_back(std::move(cell));
      cell.clear();
      any = true;
    } else if (c == '\r' || c == '\n') {
      if (c == '\r' && k + 1 < text.size() && text[k + 1] == '\n') ++k;
      if (any || !cell.empty()) {
        row.push_back(std::move(cell));
        rows.push_back(std::move(row));
      }
      cell.clear();
      row.clear();
      any = false;
    } else {
      cell += c;
      any = true;
    }
  }
  if (quoted) throw DomainError("csv: unterminated quoted cell");
  if (any || !cell.empty()) {
    row.push_back(std::move(cell));
    rows.push_back(std::move(row));
  }
  return rows;
}

LabelledMatrix parse_matrix_csv(const std::string& text) {
  const auto rows = parse_csv(text);
  if (rows.empty()) throw DomainError("csv: empty document");
  LabelledMatrix out;
  out.labels.assign(rows[0].begin() + 1, rows[0].end());
  const std::size_t n = out.labels.size();
  if (rows.size() != n + 1) throw DomainError("csv: expected one row per basis label");
  out.matrix = Matrix<TauRational>(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    const auto& r = rows[i + 1];
    if (r.size() != n + 1 || r[0] != out.labels[i]) throw DomainError("csv: row " + std::to_string(i + 1) + " is malformed");
    for (std::size_t j = 0; j < n; ++j) out.matrix(i, j) = TauRational::parse(r[j + 1]);
  }
  return out;
}

Json moment_report_json(const MomentReport& r) {
  Json spec{{"group", group_name(r.spec.group)},
            {"tau", r.spec.tau},
            {"i", r.spec.indices.i},
            {"j", r.spec.indices.j}};
  if (r.spec.group == Group::unitary) {
    spec["i_conj"] = r.spec.indices.i_conj;
    spec["j_conj"] = r.spec.indices.j_conj;
  }
  Json out{{"spec", std::move(spec)},
           {"estimate", r.estimate},
           {"stderr", r.stderr_},
           {"exact", r.exact.str()},
           {"z", r.z},
           {"samples", r.spec.samples},
           {"seed", r.spec.seed}};
  if (r.spec.group == Group::unitary) {
    out["estimate_imag"] = r.estimate_imag;
    out["stderr_imag"] = r.stderr_imag;
    out["z_imag"] = r.z_imag;
  }
  return out;
}

Json character_table_json(const CharacterTable& t) {
  return Json{{"schema", kCharacterSchema},
              {"n", t.n()},
              {"partitions", partitions_json(t.partitions())},
              {"values", t.values()}};
}

CharacterTable character_table_from_json(const Json& j) {
  if (!j.is_object() || j.value("schema", std::string()) != kCharacterSchema)
    throw DomainError("character cache: missing or unknown schema tag");
  std::vector<Partition> parts;
  for (const auto& p : field<std::vector<std::string>>(j, "partitions")) parts.push_back(Partition::parse(p));
  return CharacterTable(field<int>(j, "n"), std::move(parts), field<std::vector<std::int64_t>>(j, "values"));
}

std::filesystem::path cache_dir() {
  if (const char* dir = std::getenv("WG_CACHE_DIR"); dir && *dir) return dir;
  if (const char* xdg = std::getenv("XDG_CACHE_HOME"); xdg && *xdg) return std::filesystem::path(xdg) / "wgcalc";
  if (const char* home = std::getenv("HOME"); home && *home)
    return std::filesystem::path(home) / ".cache" / "wgcalc";
  return std::filesystem::temp_directory_path() / "wgcalc";
}

std::filesystem::path character_cache_path(int n) {
  return cache_dir() / ("characters-" + std::to_string(n) + ".json");
}

std::optional<CharacterTable> load_character_cache(int n) {
  std::ifstream in(character_cache_path(n));
  if (!in) return std::nullopt;
  std::stringstream buf;
  buf << in.rdbuf();
  try {
    auto t = character_table_from_json(Json::parse(buf.str()));
    if (t.n() != n) return std::nullopt;
    return t;
  } catch (const std::exception&) {
    return std::nullopt;
  }
}

bool save_character_cache(const CharacterTable& t) {
  std::error_code ec;
  const auto path = character_cache_path(t.n());
  std::filesystem::create_directories(path.parent_path(), ec);
  if (ec) return false;
  const auto tmp = path.string() + ".tmp";
  {
    std::ofstream out(tmp, std::ios::trunc);
    if (!out) return false;
    out << character_table_json(t).dump() << '\n';
    if (!out) return false;
  }
  std::filesystem::rename(tmp, path, ec);
  return !ec;
}

CharacterTable ensure_characters(int n, bool refresh) {
  if (!refresh) {
    if (auto cached = load_character_cache(n)) {
      cached->install();
      return *cached;
    }
  }
  CharacterTable t = CharacterTable::compute(n);
  save_character_cache(t);
  return t;
}

}  // namespace wg::io
