#ifndef IONLINK_FORMAT_HPP
#define IONLINK_FORMAT_HPP

#include <array>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <string>

namespace ionlink {

/// Rounds to 6 significant digits. Every emitted number passes through this,
/// so CSV and JSON outputs carry the same values.
inline double round_sig6(double x) {
  if (x == 0.0) return 0.0;  // folds -0
  if (!std::isfinite(x)) return x;
  std::array<char, 32> buf{};
  std::snprintf(buf.data(), buf.size(), "%.6g", x);
  return std::strtod(buf.data(), nullptr);
}

/// Shortest round-trip decimal of the 6-significant-digit value.
inline std::string format_number(double x) {
  const double r = round_sig6(x);
  std::array<char, 32> buf{};
  const auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), r);
  return std::string(buf.data(), ptr);
}

}  // namespace ionlink

#endif
