#ifndef IONLINK_DISPERSION_HPP
#define IONLINK_DISPERSION_HPP

// Refractive-index models for quasi-phase-matched nonlinear crystals.
//
// Generalised Sellmeier form, wavelength l in micrometres:
//   n^2(l) = a + sum_i b_i l^2 / (l^2 - c_i) - d l^2
//
// The built-in sets mirror data/dispersion/*.txt; see docs/data-formats.md
// for provenance.

#include <cmath>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ionlink/error.hpp"
#include "ionlink/keyvalue.hpp"

namespace ionlink {

inline constexpr std::string_view kDispersionDataVersion = "2026.1";
inline constexpr std::string_view kDispersionFormat = "ionlink-dispersion/1";

enum class Material { PPLN, PPKTP, Custom };

inline std::string_view to_string(Material m) noexcept {
  switch (m) {
    case Material::PPLN: return "PPLN";
    case Material::PPKTP: return "PPKTP";
    case Material::Custom: return "custom";
  }
  return "?";
}

struct SellmeierTerm {
  double b;
  double c;  ///< pole position [um^2]
};

struct SellmeierCoefficients {
  double a = 1.0;
  std::vector<SellmeierTerm> terms;
  double d = 0.0;

  double index(double wavelength_um) const {
    const double l2 = wavelength_um * wavelength_um;
    double n2 = a - d * l2;
    for (const auto& t : terms) n2 += t.b * l2 / (l2 - t.c);
    return std::sqrt(n2);
  }
};

class DispersionModel {
public:
  DispersionModel(Material material, std::string name, SellmeierCoefficients coeffs, double min_nm, double max_nm,
                  double temperature_k, std::string version = std::string(kDispersionDataVersion))
      : material_(material),
        name_(std::move(name)),
        coeffs_(std::move(coeffs)),
        min_nm_(min_nm),
        max_nm_(max_nm),
        temperature_k_(temperature_k),
        version_(std::move(version)) {
    validate();
  }

  Material material() const noexcept { return material_; }
  const std::string& name() const noexcept { return name_; }
  const SellmeierCoefficients& coefficients() const noexcept { return coeffs_; }
  double min_nm() const noexcept { return min_nm_; }
  double max_nm() const noexcept { return max_nm_; }
  double temperature_k() const noexcept { return temperature_k_; }
  const std::string& version() const noexcept { return version_; }

  bool in_range(double wavelength_nm) const noexcept {
    return wavelength_nm >= min_nm_ && wavelength_nm <= max_nm_;
  }

  /// Index at a vacuum wavelength; `field` names the caller's quantity in
  /// the out-of-range message.
  double index(double wavelength_nm, std::string_view field = "wavelength") const {
    if (!in_range(wavelength_nm)) {
      std::ostringstream msg;
      msg << field << " wavelength " << wavelength_nm << " nm is outside the " << name_ << " dispersion range ["
          << min_nm_ << ", " << max_nm_ << "] nm";
      throw DomainError(msg.str());
    }
    return coeffs_.index(wavelength_nm * 1e-3);
  }

private:
  void validate() const {
    if (!(min_nm_ > 0.0 && max_nm_ > min_nm_)) throw DomainError("dispersion range must satisfy 0 < min < max");
    if (!(temperature_k_ > 0.0)) throw DomainError("dispersion temperature must be positive");
    constexpr int kSamples = 512;
    for (int i = 0; i <= kSamples; ++i) {
      const double nm = min_nm_ + (max_nm_ - min_nm_) * i / kSamples;
      const double n = coeffs_.index(nm * 1e-3);
      if (!std::isfinite(n) || !(n > 1.0 && n < 4.0)) {
        std::ostringstream msg;
        msg << name_ << ": refractive index " << n << " at " << nm << " nm is outside (1, 4)";
        throw DomainError(msg.str());
      }
    }
    for (const auto& t : coeffs_.terms) {
      const double pole_nm = std::sqrt(std::abs(t.c)) * 1e3;
      if (t.c > 0.0 && pole_nm >= min_nm_ && pole_nm <= max_nm_)
        throw DomainError(name_ + ": Sellmeier pole inside the valid range");
    }
  }

  Material material_;
  std::string name_;
  SellmeierCoefficients coeffs_;
  double min_nm_;
  double max_nm_;
  double temperature_k_;
  std::string version_;
};

/// Congruent LiNbO3, extraordinary index, 21 C (Zelmon et al. 1997).
inline DispersionModel lithium_niobate_extraordinary() {
  return {Material::PPLN,
          "congruent LiNbO3 (n_e)",
          {1.0, {{2.9804, 0.02047}, {0.5981, 0.0666}, {8.9543, 416.08}}, 0.0},
          400.0,
          5000.0,
          294.15};
}

/// Flux-grown KTiOPO4, z-axis index (Fan et al. 1987).
inline DispersionModel ktp_z() {
  return {Material::PPKTP, "KTiOPO4 (n_z)", {2.25411, {{1.06543, 0.05486}}, 0.02140}, 400.0, 1600.0, 293.15};
}

inline DispersionModel builtin_dispersion(Material m) {
  switch (m) {
    case Material::PPLN: return lithium_niobate_extraordinary();
    case Material::PPKTP: return ktp_z();
    case Material::Custom: break;
  }
  throw DomainError("no built-in dispersion data for custom materials");
}

inline Material parse_material(std::string_view text) {
  if (text == "PPLN" || text == "ppln" || text == "pplne" || text == "ppln-e") return Material::PPLN;
  if (text == "PPKTP" || text == "ppktp" || text == "ppktpz" || text == "ppktp-z") return Material::PPKTP;
  if (text == "custom") return Material::Custom;
  throw DomainError("unknown material '" + std::string(text) + "'");
}

inline DispersionModel parse_dispersion_model(const std::vector<kv::Entry>& entries) {
  Material material = Material::Custom;
  std::string name = "custom";
  std::string version;
  SellmeierCoefficients coeffs;
  double min_nm = -1.0;
  double max_nm = -1.0;
  double temperature_k = -1.0;
  for (const auto& e : entries) {
    const auto where = "line " + std::to_string(e.line);
    if (e.key == "format") {
      if (e.value != kDispersionFormat) throw ParseError(where + ": unsupported dispersion format '" + e.value + "'");
    } else if (e.key == "material") {
      material = parse_material(e.value);
    } else if (e.key == "name") {
      name = e.value;
    } else if (e.key == "version") {
      version = e.value;
    } else if (e.key == "a") {
      coeffs.a = kv::to_double(e.value, "a");
    } else if (e.key == "d") {
      coeffs.d = kv::to_double(e.value, "d");
    } else if (e.key == "term") {
      const auto f = kv::fields(e.value);
      if (f.size() != 2) throw ParseError(where + ": term expects <b> <c>");
      coeffs.terms.push_back({kv::to_double(f[0], "b"), kv::to_double(f[1], "c")});
    } else if (e.key == "valid_min_nm") {
      min_nm = kv::to_double(e.value, e.key);
    } else if (e.key == "valid_max_nm") {
      max_nm = kv::to_double(e.value, e.key);
    } else if (e.key == "temperature_k") {
      temperature_k = kv::to_double(e.value, e.key);
    } else if (e.key != "axis" && e.key != "source") {
      throw ParseError(where + ": unknown key '" + e.key + "'");
    }
  }
  if (min_nm < 0.0 || max_nm < 0.0 || temperature_k < 0.0)
    throw ParseError("dispersion file needs valid_min_nm, valid_max_nm and temperature_k");
  if (version.empty()) version = std::string(kDispersionDataVersion);
  return {material, std::move(name), std::move(coeffs), min_nm, max_nm, temperature_k, std::move(version)};
}

inline DispersionModel load_dispersion_model(const std::string& path) {
  return parse_dispersion_model(kv::parse_file(path));
}

}  // namespace ionlink

#endif
