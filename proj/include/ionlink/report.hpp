#ifndef IONLINK_REPORT_HPP
#define IONLINK_REPORT_HPP

// Tabular results rendered as CSV or JSON. Numbers go through
// format_number/round_sig6 in both encodings so they carry identical values.

#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include <nlohmann/json.hpp>

#include "ionlink/format.hpp"

namespace ionlink {

enum class OutputFormat { Csv, Json };

using Value = std::variant<double, std::int64_t, std::uint64_t, std::string, std::vector<std::string>>;

struct Report {
  std::vector<std::string> columns;
  std::vector<std::vector<Value>> rows;
  std::vector<std::string> notes;
  /// Single-record results render as one JSON object instead of {"rows": [...]}.
  bool record = false;
};

namespace detail {

inline std::string csv_escape(std::string_view s) {
  if (s.find_first_of(",\"\n") == std::string_view::npos) return std::string(s);
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + '"';
}

inline std::string csv_cell(const Value& v) {
  struct Visitor {
    std::string operator()(double x) const { return format_number(x); }
    std::string operator()(std::int64_t x) const { return std::to_string(x); }
    std::string operator()(std::uint64_t x) const { return std::to_string(x); }
    std::string operator()(const std::string& s) const { return csv_escape(s); }
    std::string operator()(const std::vector<std::string>& list) const {
      std::string joined;
      for (std::size_t i = 0; i < list.size(); ++i) joined += (i ? ";" : "") + list[i];
      return csv_escape(joined);
    }
  };
  return std::visit(Visitor{}, v);
}

inline nlohmann::json json_cell(const Value& v) {
  struct Visitor {
    nlohmann::json operator()(double x) const { return round_sig6(x); }
    nlohmann::json operator()(std::int64_t x) const { return x; }
    nlohmann::json operator()(std::uint64_t x) const { return x; }
    nlohmann::json operator()(const std::string& s) const { return s; }
    nlohmann::json operator()(const std::vector<std::string>& list) const { return list; }
  };
  return std::visit(Visitor{}, v);
}

}  // namespace detail

inline void write_csv(std::ostream& out, const Report& r) {
  for (std::size_t i = 0; i < r.columns.size(); ++i) out << (i ? "," : "") << r.columns[i];
  out << "\n";
  for (const auto& row : r.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) out << (i ? "," : "") << detail::csv_cell(row[i]);
    out << "\n";
  }
  for (const auto& note : r.notes) out << "# " << note << "\n";
}

inline nlohmann::ordered_json to_json(const Report& r) {
  auto row_object = [&](const std::vector<Value>& row) {
    nlohmann::ordered_json obj = nlohmann::ordered_json::object();
    for (std::size_t i = 0; i < row.size(); ++i) obj[r.columns[i]] = detail::json_cell(row[i]);
    return obj;
  };
  nlohmann::ordered_json doc;
  if (r.record && r.rows.size() == 1) {
    doc = row_object(r.rows.front());
  } else {
    doc["rows"] = nlohmann::ordered_json::array();
    for (const auto& row : r.rows) doc["rows"].push_back(row_object(row));
  }
  if (!r.notes.empty()) doc["notes"] = r.notes;
  return doc;
}

inline void write_json(std::ostream& out, const Report& r) { out << to_json(r).dump(2) << "\n"; }

inline void write_report(std::ostream& out, const Report& r, OutputFormat fmt) {
  if (fmt == OutputFormat::Csv)
    write_csv(out, r);
  else
    write_json(out, r);
}

}  // namespace ionlink

#endif
