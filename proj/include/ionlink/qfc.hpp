#ifndef IONLINK_QFC_HPP
#define IONLINK_QFC_HPP

// Three-wave-mixing frequency conversion planning: energy conservation,
// quasi-phase-matching periods and pump-noise ordering rules.

#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "ionlink/constants.hpp"
#include "ionlink/dispersion.hpp"
#include "ionlink/error.hpp"

namespace ionlink {

enum class FieldRole { Input, Pump, Output };

inline std::string_view to_string(FieldRole r) noexcept {
  switch (r) {
    case FieldRole::Input: return "input";
    case FieldRole::Pump: return "pump";
    case FieldRole::Output: return "output";
  }
  return "?";
}

/// Optical field stored by frequency (THz); wavelengths are vacuum values.
class LightField {
public:
  LightField(double frequency_thz, FieldRole role) : frequency_thz_(frequency_thz), role_(role) {
    if (!(frequency_thz > 0.0) || !std::isfinite(frequency_thz))
      throw DomainError(std::string(to_string(role)) + " frequency must be positive");
  }

  static LightField from_wavelength_nm(double nm, FieldRole role) {
    if (!(nm > 0.0) || !std::isfinite(nm)) throw DomainError(std::string(to_string(role)) + " wavelength must be positive");
    return {constants::kSpeedOfLight / nm * 1e-3, role};
  }

  double frequency_thz() const noexcept { return frequency_thz_; }
  double wavelength_nm() const noexcept { return constants::kSpeedOfLight / frequency_thz_ * 1e-3; }
  FieldRole role() const noexcept { return role_; }

  /// k = 2 pi n / lambda in 1/m.
  double wavenumber(const DispersionModel& dispersion) const {
    const double nm = wavelength_nm();
    return 2.0 * std::numbers::pi * dispersion.index(nm, to_string(role_)) / (nm * 1e-9);
  }

private:
  double frequency_thz_;
  FieldRole role_;
};

enum class MixingKind { DFG, SFG };

inline std::string_view to_string(MixingKind k) noexcept { return k == MixingKind::DFG ? "dfg" : "sfg"; }

inline MixingKind parse_mixing_kind(std::string_view text) {
  if (text == "dfg" || text == "DFG") return MixingKind::DFG;
  if (text == "sfg" || text == "SFG") return MixingKind::SFG;
  throw DomainError("unknown conversion kind '" + std::string(text) + "'");
}

/// nu_out = nu_in - nu_pump.
inline LightField dfg_output(const LightField& input, const LightField& pump) {
  if (!(input.frequency_thz() > pump.frequency_thz()))
    throw DomainError("DFG requires the input frequency to exceed the pump frequency");
  return {input.frequency_thz() - pump.frequency_thz(), FieldRole::Output};
}

/// nu_out = nu_in + nu_pump.
inline LightField sfg_output(const LightField& input, const LightField& pump) {
  return {input.frequency_thz() + pump.frequency_thz(), FieldRole::Output};
}

inline LightField mixing_output(const LightField& input, const LightField& pump, MixingKind kind) {
  return kind == MixingKind::DFG ? dfg_output(input, pump) : sfg_output(input, pump);
}

inline constexpr double kEnergyTolerance = 1e-9;  // relative

/// Which process (if any) relates the three frequencies.
inline MixingKind infer_kind(const LightField& input, const LightField& pump, const LightField& output) {
  const double out = output.frequency_thz();
  const double dfg = input.frequency_thz() - pump.frequency_thz();
  const double sfg = input.frequency_thz() + pump.frequency_thz();
  if (std::abs(out - dfg) <= kEnergyTolerance * out) return MixingKind::DFG;
  if (std::abs(out - sfg) <= kEnergyTolerance * out) return MixingKind::SFG;
  throw DomainError("input, pump and output frequencies violate energy conservation");
}

inline void check_order(int order) {
  if (order < 1 || order % 2 == 0) throw DomainError("poling order must be an odd positive integer");
}

class ConversionStage {
public:
  /// Output follows from energy conservation. The poling period defaults to
  /// infinity (unpoled crystal).
  ConversionStage(LightField input, LightField pump, MixingKind kind, double efficiency, int order = 1,
                  double poling_period_um = std::numeric_limits<double>::infinity())
      : input_(relabel(input, FieldRole::Input)),
        pump_(relabel(pump, FieldRole::Pump)),
        output_(mixing_output(input_, pump_, kind)),
        kind_(kind),
        order_(order),
        poling_period_um_(poling_period_um),
        efficiency_(efficiency) {
    check_order(order);
    if (!(efficiency >= 0.0 && efficiency <= 1.0)) throw DomainError("stage efficiency must lie in [0, 1]");
    if (!(poling_period_um > 0.0)) throw DomainError("poling period must be positive");
  }

  const LightField& input() const noexcept { return input_; }
  const LightField& pump() const noexcept { return pump_; }
  const LightField& output() const noexcept { return output_; }
  MixingKind kind() const noexcept { return kind_; }
  int order() const noexcept { return order_; }
  double poling_period_um() const noexcept { return poling_period_um_; }
  double efficiency() const noexcept { return efficiency_; }

  ConversionStage with_poling_period(double period_um) const {
    return {input_, pump_, kind_, efficiency_, order_, period_um};
  }

private:
  static LightField relabel(const LightField& f, FieldRole role) { return {f.frequency_thz(), role}; }

  LightField input_;
  LightField pump_;
  LightField output_;
  MixingKind kind_;
  int order_;
  double poling_period_um_;
  double efficiency_;
};

/// Phase mismatch before poling, oriented so that forward first-order QPM
/// needs it positive: k_in - k_pump - k_out for DFG, k_out - k_in - k_pump
/// for SFG.
inline double intrinsic_mismatch(const LightField& input, const LightField& pump, const LightField& output,
                                 MixingKind kind, const DispersionModel& dispersion) {
  const double k_in = input.wavenumber(dispersion);
  const double k_pump = pump.wavenumber(dispersion);
  const double k_out = output.wavenumber(dispersion);
  return kind == MixingKind::DFG ? k_in - k_pump - k_out : k_out - k_in - k_pump;
}

/// Residual mismatch dk = (intrinsic mismatch) - 2 pi m / period, in 1/m.
inline double qpm_residual(const ConversionStage& stage, const DispersionModel& dispersion) {
  const double grating = std::isinf(stage.poling_period_um())
                             ? 0.0
                             : 2.0 * std::numbers::pi * stage.order() / (stage.poling_period_um() * 1e-6);
  return intrinsic_mismatch(stage.input(), stage.pump(), stage.output(), stage.kind(), dispersion) - grating;
}

/// Period (um) that zeroes the residual for poling order m.
inline double solve_poling_period(const LightField& input, const LightField& pump, const LightField& output,
                                  const DispersionModel& dispersion, int order) {
  check_order(order);
  const MixingKind kind = infer_kind(input, pump, output);
  const double dk0 = intrinsic_mismatch({input.frequency_thz(), FieldRole::Input}, {pump.frequency_thz(), FieldRole::Pump},
                                        {output.frequency_thz(), FieldRole::Output}, kind, dispersion);
  if (!(dk0 > 0.0)) {
    std::ostringstream msg;
    msg << "phase mismatch " << dk0 << " 1/m is not positive: this ordering cannot be quasi-phase-matched "
        << "with a positive poling period";
    throw DomainError(msg.str());
  }
  // first-order period scaled last, so order m gives exactly m times it
  return 2.0 * std::numbers::pi / dk0 * 1e6 * order;
}

inline double solve_poling_period(const ConversionStage& stage, const DispersionModel& dispersion) {
  return solve_poling_period(stage.input(), stage.pump(), stage.output(), dispersion, stage.order());
}

enum class NoiseKind { Pass, SpdcRisk, SrsRisk };

inline std::string_view to_string(NoiseKind k) noexcept {
  switch (k) {
    case NoiseKind::Pass: return "PASS";
    case NoiseKind::SpdcRisk: return "SPDC_RISK";
    case NoiseKind::SrsRisk: return "SRS_RISK";
  }
  return "?";
}

struct NoiseFinding {
  NoiseKind kind;
  std::string detail;
};

inline constexpr double kDefaultSrsThresholdThz = 5.0;

/// Pump-ordering noise rules. SPDC: the pump must be the lowest frequency.
/// SRS: the output must sit above the pump by at least the threshold.
inline std::vector<NoiseFinding> noise_audit(const ConversionStage& stage,
                                             double srs_threshold_thz = kDefaultSrsThresholdThz) {
  std::vector<NoiseFinding> findings;
  const double nu_in = stage.input().frequency_thz();
  const double nu_pump = stage.pump().frequency_thz();
  const double nu_out = stage.output().frequency_thz();
  if (nu_pump > nu_out || nu_pump > nu_in) {
    std::ostringstream msg;
    msg << "pump (" << nu_pump << " THz) is not the lowest frequency; parasitic downconversion can land on the signal";
    findings.push_back({NoiseKind::SpdcRisk, msg.str()});
  }
  const double detuning = nu_out - nu_pump;
  if (detuning < srs_threshold_thz) {
    std::ostringstream msg;
    msg << "output-pump detuning " << detuning << " THz is below " << srs_threshold_thz << " THz";
    findings.push_back({NoiseKind::SrsRisk, msg.str()});
  }
  if (findings.empty()) findings.push_back({NoiseKind::Pass, "pump is the lowest frequency and well detuned"});
  return findings;
}

inline constexpr double kChainWavelengthTolerance = 0.1;  // nm

/// Product of stage efficiencies; each stage must take the previous output.
inline double chain_efficiency(const std::vector<ConversionStage>& stages) {
  double eff = 1.0;
  for (std::size_t i = 0; i < stages.size(); ++i) {
    if (i > 0) {
      const double prev = stages[i - 1].output().wavelength_nm();
      const double next = stages[i].input().wavelength_nm();
      if (std::abs(prev - next) > kChainWavelengthTolerance) {
        std::ostringstream msg;
        msg << "stage " << i << " input " << next << " nm does not match stage " << i - 1 << " output " << prev
            << " nm";
        throw ChainError(msg.str());
      }
    }
    eff *= stages[i].efficiency();
  }
  return eff;
}

/// One row of the reference conversion plan for Ba+ photons.
struct ConversionRow {
  std::string label;
  double input_nm;
  double pump_nm;
  Material device;
};

/// Ba+ 493/650 nm lines and the Rb D2 line, with the 1343 nm and 1569 nm
/// pumps.
inline std::vector<ConversionRow> reference_conversions() {
  return {
      {"493 nm -> 780 nm", 493.41, 1343.0, Material::PPKTP},
      {"650 nm -> 1259 nm", 649.87, 1343.0, Material::PPLN},
      {"780 nm -> 1550 nm", 780.24, 1569.0, Material::PPLN},
  };
}

}  // namespace ionlink

#endif
