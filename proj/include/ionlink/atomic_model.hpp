#ifndef IONLINK_ATOMIC_MODEL_HPP
#define IONLINK_ATOMIC_MODEL_HPP

// Level structure of a singly ionised alkaline-earth ion with an S1/2 ground
// state, P1/2 excited state and metastable D3/2 shelf (138Ba+ by default).
//
// Magnetic quantum numbers are half-integers and are stored doubled
// (`two_mj = 2 * m_j`) so that every comparison is exact integer arithmetic.

#include <charconv>
#include <cmath>
#include <compare>
#include <cstdlib>
#include <map>
#include <ostream>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ionlink/error.hpp"
#include "ionlink/keyvalue.hpp"

namespace ionlink {

enum class Level { S12, P12, D32 };

/// Twice the total angular momentum J of a level.
constexpr int two_j(Level level) noexcept { return level == Level::D32 ? 3 : 1; }

inline std::string_view to_string(Level level) noexcept {
  switch (level) {
    case Level::S12: return "S12";
    case Level::P12: return "P12";
    case Level::D32: return "D32";
  }
  return "?";
}

inline Level parse_level(std::string_view text) {
  if (text == "S12") return Level::S12;
  if (text == "P12") return Level::P12;
  if (text == "D32") return Level::D32;
  throw ParseError("unknown level '" + std::string(text) + "'");
}

class ZeemanState {
public:
  constexpr ZeemanState(Level level, int two_mj) : level_(level), two_mj_(two_mj) {
    if (std::abs(two_mj) > two_j(level) || (two_mj - two_j(level)) % 2 != 0)
      throw DomainError("m_j = " + std::to_string(two_mj) + "/2 is not a sublevel of " +
                        std::string(to_string(level)));
  }

  constexpr Level level() const noexcept { return level_; }
  constexpr int two_mj() const noexcept { return two_mj_; }
  constexpr double mj() const noexcept { return 0.5 * two_mj_; }

  constexpr ZeemanState mirrored() const { return {level_, -two_mj_}; }

  friend constexpr auto operator<=>(const ZeemanState&, const ZeemanState&) = default;

private:
  Level level_;
  int two_mj_;
};

/// All sublevels of a level in ascending m_j.
inline std::vector<ZeemanState> sublevels(Level level) {
  std::vector<ZeemanState> out;
  for (int m = -two_j(level); m <= two_j(level); m += 2) out.emplace_back(level, m);
  return out;
}

inline std::string format_mj(int two_mj) {
  std::string s = two_mj >= 0 ? "+" : "-";
  return s + std::to_string(std::abs(two_mj)) + "/2";
}

inline std::ostream& operator<<(std::ostream& os, const ZeemanState& s) {
  return os << to_string(s.level()) << "(m=" << format_mj(s.two_mj()) << ")";
}

/// Photon or drive polarization, labelled by q = m_upper - m_lower of the
/// transition it drives (absorption) or is emitted on (emission).
enum class Polarization { SigmaMinus = -1, Pi = 0, SigmaPlus = +1 };

constexpr int delta_m(Polarization p) noexcept { return static_cast<int>(p); }

inline std::string_view to_string(Polarization p) noexcept {
  switch (p) {
    case Polarization::SigmaMinus: return "sigma-";
    case Polarization::Pi: return "pi";
    case Polarization::SigmaPlus: return "sigma+";
  }
  return "?";
}

/// Polarization linking two sublevels, if the dipole selection rule allows it.
inline bool polarization_between(const ZeemanState& upper, const ZeemanState& lower, Polarization& out) {
  const int two_q = upper.two_mj() - lower.two_mj();
  if (two_q != -2 && two_q != 0 && two_q != 2) return false;
  out = static_cast<Polarization>(two_q / 2);
  return true;
}

struct DecayChannel {
  ZeemanState lower;
  Polarization polarization;
  double probability;
};

/// P1/2 branching ratios plus signed dipole coupling amplitudes.
///
/// Amplitude convention: cg(upper, lower) = <J_l m_l; 1 q | J_u m_u> with
/// Condon-Shortley phases and q = m_u - m_l. Under m -> -m the D3/2 entries
/// keep their sign and the S1/2 entries flip it; only squares enter any
/// probability.
class BranchingModel {
public:
  using Key = std::pair<ZeemanState, ZeemanState>;  // (upper, lower)

  static constexpr double kTolerance = 1e-12;

  BranchingModel(double br_493, double br_650, std::map<Key, double> cg)
      : br_493_(br_493), br_650_(br_650), cg_(std::move(cg)) {
    validate();
  }

  double br_493() const noexcept { return br_493_; }
  double br_650() const noexcept { return br_650_; }

  /// Branching fraction from P1/2 into `lower` manifold.
  double branching(Level lower) const {
    switch (lower) {
      case Level::S12: return br_493_;
      case Level::D32: return br_650_;
      case Level::P12: break;
    }
    throw DomainError("P12 does not decay into itself");
  }

  /// Zero for pairs not in the table.
  double cg(const ZeemanState& upper, const ZeemanState& lower) const {
    const auto it = cg_.find({upper, lower});
    return it == cg_.end() ? 0.0 : it->second;
  }

  const std::map<Key, double>& table() const noexcept { return cg_; }

private:
  void validate() const {
    if (!(br_493_ >= 0.0 && br_493_ <= 1.0 && br_650_ >= 0.0 && br_650_ <= 1.0))
      throw DomainError("branching ratios must lie in [0, 1]");
    if (std::abs(br_493_ + br_650_ - 1.0) > kTolerance)
      throw DomainError("branching ratios must sum to 1");
    for (const auto& [key, amp] : cg_) {
      const auto& [upper, lower] = key;
      if (upper.level() != Level::P12 || lower.level() == Level::P12)
        throw DomainError("cg entries must couple P12 to S12 or D32");
      Polarization q{};
      if (amp != 0.0 && !polarization_between(upper, lower, q))
        throw DomainError("cg entry violates the |dm| <= 1 selection rule");
      if (!std::isfinite(amp) || std::abs(amp) > 1.0 + kTolerance)
        throw DomainError("cg amplitude out of range");
    }
    for (const auto& upper : sublevels(Level::P12)) {
      for (Level lower : {Level::S12, Level::D32}) {
        double total = 0.0;
        for (const auto& l : sublevels(lower)) total += cg(upper, l) * cg(upper, l);
        if (std::abs(total - 1.0) > kTolerance) {
          std::ostringstream msg;
          msg << "squared cg amplitudes from " << upper << " into " << to_string(lower)
              << " sum to " << total << ", expected 1";
          throw DomainError(msg.str());
        }
      }
    }
  }

  double br_493_;
  double br_650_;
  std::map<Key, double> cg_;
};

/// 138Ba+ with P_s = 0.7304.
inline BranchingModel default_barium_model() {
  const ZeemanState p_up{Level::P12, +1};
  const ZeemanState p_dn{Level::P12, -1};
  const double half = std::sqrt(1.0 / 2.0);
  const double third = std::sqrt(1.0 / 3.0);
  const double sixth = std::sqrt(1.0 / 6.0);
  const double two_thirds = std::sqrt(2.0 / 3.0);
  std::map<BranchingModel::Key, double> cg{
      {{p_up, {Level::D32, +3}}, half},
      {{p_up, {Level::D32, +1}}, -third},
      {{p_up, {Level::D32, -1}}, sixth},
      {{p_dn, {Level::D32, -3}}, half},
      {{p_dn, {Level::D32, -1}}, -third},
      {{p_dn, {Level::D32, +1}}, sixth},
      {{p_up, {Level::S12, +1}}, third},
      {{p_up, {Level::S12, -1}}, -two_thirds},
      {{p_dn, {Level::S12, -1}}, -third},
      {{p_dn, {Level::S12, +1}}, two_thirds},
  };
  return {0.7304, 1.0 - 0.7304, std::move(cg)};
}

/// Every decay channel out of a P1/2 sublevel, probability = branching x cg^2.
inline std::vector<DecayChannel> allowed_decays(const ZeemanState& upper, const BranchingModel& model) {
  if (upper.level() != Level::P12)
    throw DomainError("only P12 decays are modeled, got " + std::string(to_string(upper.level())));
  std::vector<DecayChannel> out;
  for (Level lower_level : {Level::S12, Level::D32}) {
    for (const auto& lower : sublevels(lower_level)) {
      const double amp = model.cg(upper, lower);
      Polarization q{};
      if (amp == 0.0 || !polarization_between(upper, lower, q)) continue;
      out.push_back({lower, q, model.branching(lower_level) * amp * amp});
    }
  }
  return out;
}

// Model files. Amplitudes may be written as plain numbers or `[-]sqrt(a/b)`.

namespace detail {

inline int parse_two_mj(std::string_view text) {
  // "+3/2", "-1/2", "1/2"
  const auto slash = text.find('/');
  if (slash == std::string_view::npos || text.substr(slash + 1) != "2")
    throw ParseError("m_j must be written as n/2, got '" + std::string(text) + "'");
  auto num = text.substr(0, slash);
  if (!num.empty() && num.front() == '+') num.remove_prefix(1);
  int value = 0;
  const auto [ptr, ec] = std::from_chars(num.data(), num.data() + num.size(), value);
  if (ec != std::errc{} || ptr != num.data() + num.size())
    throw ParseError("m_j must be written as n/2, got '" + std::string(text) + "'");
  return value;
}

inline double parse_amplitude(std::string_view text) {
  text = kv::trim(text);
  double sign = 1.0;
  if (!text.empty() && (text.front() == '-' || text.front() == '+')) {
    if (text.substr(1).starts_with("sqrt(")) {
      sign = text.front() == '-' ? -1.0 : 1.0;
      text.remove_prefix(1);
    }
  }
  if (text.starts_with("sqrt(") && text.ends_with(")")) {
    const auto inner = text.substr(5, text.size() - 6);
    double value = 0.0;
    if (const auto slash = inner.find('/'); slash != std::string_view::npos)
      value = kv::to_double(inner.substr(0, slash), "amplitude") / kv::to_double(inner.substr(slash + 1), "amplitude");
    else
      value = kv::to_double(inner, "amplitude");
    if (value < 0.0) throw ParseError("sqrt of negative amplitude");
    return sign * std::sqrt(value);
  }
  return kv::to_double(text, "amplitude");
}

}  // namespace detail

inline constexpr std::string_view kBranchingFormat = "ionlink-branching/1";

/// Reads the key/value model format (see docs/data-formats.md). Missing
/// br_650 defaults to 1 - br_493.
inline BranchingModel parse_branching_model(const std::vector<kv::Entry>& entries) {
  double br_493 = -1.0;
  double br_650 = -1.0;
  std::map<BranchingModel::Key, double> cg;
  for (const auto& e : entries) {
    if (e.key == "format") {
      if (e.value != kBranchingFormat) throw ParseError("unsupported model format '" + e.value + "'");
    } else if (e.key == "br_493") {
      br_493 = kv::to_double(e.value, "br_493");
    } else if (e.key == "br_650") {
      br_650 = kv::to_double(e.value, "br_650");
    } else if (e.key == "cg") {
      const auto f = kv::fields(e.value);
      if (f.size() != 5)
        throw ParseError("line " + std::to_string(e.line) + ": cg expects <upper> <mj> <lower> <mj> <amplitude>");
      const ZeemanState upper{parse_level(f[0]), detail::parse_two_mj(f[1])};
      const ZeemanState lower{parse_level(f[2]), detail::parse_two_mj(f[3])};
      if (!cg.emplace(BranchingModel::Key{upper, lower}, detail::parse_amplitude(f[4])).second)
        throw ParseError("line " + std::to_string(e.line) + ": duplicate cg entry");
    } else if (e.key != "species") {
      throw ParseError("line " + std::to_string(e.line) + ": unknown key '" + e.key + "'");
    }
  }
  if (br_493 < 0.0) throw ParseError("model file is missing br_493");
  if (br_650 < 0.0) br_650 = 1.0 - br_493;
  return {br_493, br_650, std::move(cg)};
}

inline BranchingModel load_branching_model(const std::string& path) {
  return parse_branching_model(kv::parse_file(path));
}

inline std::string serialize(const BranchingModel& model, std::string_view species = "138Ba+") {
  std::ostringstream out;
  out.precision(17);
  out << "format = " << kBranchingFormat << "\n"
      << "species = " << species << "\n"
      << "br_493 = " << model.br_493() << "\n"
      << "br_650 = " << model.br_650() << "\n"
      << "# cg = <upper> <m_j> <lower> <m_j> <amplitude>\n";
  for (const auto& [key, amp] : model.table())
    out << "cg = " << to_string(key.first.level()) << " " << format_mj(key.first.two_mj()) << " "
        << to_string(key.second.level()) << " " << format_mj(key.second.two_mj()) << " " << amp << "\n";
  return out.str();
}

}  // namespace ionlink

#endif
