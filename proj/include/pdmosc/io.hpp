#pragma once

// Deterministic CSV / JSON serialization of tables and spectra. Floats are
// written in shortest round-trip form.

#include <charconv>
#include <cmath>
#include <limits>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"
#include "extensions.hpp"
#include "oscillator.hpp"

namespace pdmosc::io {

using json = nlohmann::json;

inline std::string format_double(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, res.ptr);
}

/// Rectangular numeric table with named columns and provenance lines.
struct Table {
  std::vector<std::string> comments;
  std::vector<std::string> columns;
  std::vector<std::vector<double>> rows;

  void add_row(std::vector<double> row) {
    if (row.size() != columns.size()) throw std::logic_error("Table: row width does not match header");
    rows.push_back(std::move(row));
  }
};

inline std::string params_comment(const ModelParams& p, const std::optional<ExtensionSpec>& spec = std::nullopt) {
  std::string s = "alpha=" + format_double(p.alpha()) + " L=" + std::to_string(p.L()) +
                  " omega=" + format_double(p.omega());
  if (p.deformed()) s += " Delta=" + format_double(p.delta());
  if (spec) s += " type=" + ext::to_string(spec->type) + " m=" + std::to_string(spec->m);
  return s;
}

inline void write_csv(std::ostream& os, const Table& t) {
  for (const auto& c : t.comments) os << "# " << c << '\n';
  for (std::size_t j = 0; j < t.columns.size(); ++j) os << (j ? "," : "") << t.columns[j];
  os << '\n';
  for (const auto& row : t.rows) {
    for (std::size_t j = 0; j < row.size(); ++j) os << (j ? "," : "") << format_double(row[j]);
    os << '\n';
  }
}

inline json table_to_json(const Table& t) {
  json rows = json::array();
  for (const auto& row : t.rows) rows.push_back(row);
  return {{"comments", t.comments}, {"columns", t.columns}, {"rows", rows}};
}

inline json params_to_json(const ModelParams& p) {
  return {{"alpha", p.alpha()}, {"L", p.L()}, {"omega", p.omega()}};
}

inline json spectrum_to_json(const SpectrumTable& t) {
  json entries = json::array();
  for (const auto& e : t.entries) entries.push_back({{"n", e.n}, {"energy", e.energy}});
  json out = {{"source", t.source == SpectrumSource::closed_form ? "closed_form" : "oracle"},
              {"params", params_to_json(t.params)},
              {"entries", entries}};
  out["extension"] = t.extension ? json{{"type", ext::to_string(t.extension->type)}, {"m", t.extension->m}}
                                 : json(nullptr);
  return out;
}

inline SpectrumTable spectrum_from_json(const json& j) {
  SpectrumTable t;
  const std::string src = j.at("source").get<std::string>();
  if (src == "closed_form") t.source = SpectrumSource::closed_form;
  else if (src == "oracle") t.source = SpectrumSource::oracle;
  else throw std::invalid_argument("spectrum_from_json: unknown source '" + src + "'");
  const auto& p = j.at("params");
  t.params = ModelParams(p.at("alpha").get<double>(), p.at("L").get<int>(), p.at("omega").get<double>());
  for (const auto& e : j.at("entries")) t.entries.push_back({e.at("n").get<int>(), e.at("energy").get<double>()});
  if (j.contains("extension") && !j["extension"].is_null()) {
    const auto type = ext::parse_type(j["extension"].at("type").get<std::string>());
    if (!type) throw std::invalid_argument("spectrum_from_json: unknown extension type");
    t.extension = ExtensionSpec{*type, j["extension"].at("m").get<int>()};
  }
  return t;
}

inline Table spectrum_table(const SpectrumTable& s) {
  Table t;
  t.comments.push_back(params_comment(s.params, s.extension) + " source=" +
                       (s.source == SpectrumSource::closed_form ? "closed_form" : "oracle"));
  t.columns = {"n", "energy"};
  for (const auto& e : s.entries) t.add_row({static_cast<double>(e.n), e.energy});
  return t;
}

}  // namespace pdmosc::io
