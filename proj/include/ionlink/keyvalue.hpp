#ifndef IONLINK_KEYVALUE_HPP
#define IONLINK_KEYVALUE_HPP

// Line-oriented `key = value` text files. `#` starts a comment, keys may
// repeat (table rows use that), and entry order is preserved.

#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "ionlink/error.hpp"

namespace ionlink::kv {

struct Entry {
  std::string key;
  std::string value;
  int line = 0;
};

inline std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

inline std::vector<Entry> parse(std::istream& in, std::string_view source = "<stream>") {
  std::vector<Entry> entries;
  std::string raw;
  int line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    std::string_view line = raw;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string_view::npos)
      throw ParseError(std::string(source) + ":" + std::to_string(line_no) + ": expected `key = value`");
    const auto key = trim(line.substr(0, eq));
    if (key.empty())
      throw ParseError(std::string(source) + ":" + std::to_string(line_no) + ": empty key");
    entries.push_back({std::string(key), std::string(trim(line.substr(eq + 1))), line_no});
  }
  return entries;
}

inline std::vector<Entry> parse_string(const std::string& text, std::string_view source = "<string>") {
  std::istringstream in(text);
  return parse(in, source);
}

inline std::vector<Entry> parse_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  return parse(in, path);
}

inline double to_double(std::string_view text, std::string_view what) {
  text = trim(text);
  double value = 0.0;
  const auto* end = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (ec != std::errc{} || ptr != end || !std::isfinite(value))
    throw ParseError("invalid number for " + std::string(what) + ": '" + std::string(text) + "'");
  return value;
}

/// Splits on runs of whitespace.
inline std::vector<std::string> fields(std::string_view text) {
  std::vector<std::string> out;
  std::istringstream in{std::string(text)};
  std::string f;
  while (in >> f) out.push_back(f);
  return out;
}

}  // namespace ionlink::kv

#endif
