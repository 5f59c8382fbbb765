#ifndef IONLINK_FIBER_HPP
#define IONLINK_FIBER_HPP

// Fiber attenuation and end-to-end link budgets.

#include <cmath>
#include <optional>
#include <sstream>
#include <vector>

#include "ionlink/error.hpp"
#include "ionlink/qfc.hpp"

namespace ionlink {

struct FiberChannel {
  double wavelength_nm;
  double attenuation_db_per_km;  ///< loss, >= 0

  FiberChannel(double nm, double db_per_km) : wavelength_nm(nm), attenuation_db_per_km(db_per_km) {
    if (!(nm > 0.0)) throw DomainError("fiber wavelength must be positive");
    if (!(db_per_km >= 0.0) || !std::isfinite(db_per_km)) throw DomainError("fiber attenuation must be >= 0 dB/km");
  }
};

/// Representative single-mode losses at the Ba+ lines and their conversion
/// targets.
inline std::vector<FiberChannel> reference_fibers() {
  return {{493.0, 50.0}, {650.0, 15.0}, {780.0, 3.5}, {1259.0, 0.3}, {1550.0, 0.18}};
}

/// Closest reference fiber within `tolerance_nm`.
inline std::optional<FiberChannel> lookup_fiber(double wavelength_nm, double tolerance_nm = 5.0) {
  std::optional<FiberChannel> best;
  for (const auto& f : reference_fibers()) {
    const double gap = std::abs(f.wavelength_nm - wavelength_nm);
    if (gap <= tolerance_nm && (!best || gap < std::abs(best->wavelength_nm - wavelength_nm))) best = f;
  }
  return best;
}

/// T = 10^(-alpha L / 10).
inline double transmission(const FiberChannel& fiber, double length_km) {
  if (!(length_km >= 0.0)) throw DomainError("fiber length must be non-negative");
  return std::pow(10.0, -fiber.attenuation_db_per_km * length_km / 10.0);
}

/// Length beyond which converting (efficiency eta, then the lower-loss
/// fiber) beats sending the raw photon:
///   eta 10^(-a_c L/10) = 10^(-a_r L/10)  =>  L = 10 log10(1/eta) / (a_r - a_c)
inline double conversion_crossing(const FiberChannel& raw, const FiberChannel& converted, double efficiency) {
  if (!(efficiency > 0.0 && efficiency <= 1.0)) throw DomainError("conversion efficiency must lie in (0, 1]");
  const double gain = raw.attenuation_db_per_km - converted.attenuation_db_per_km;
  if (!(gain > 0.0)) {
    std::ostringstream msg;
    msg << "no crossing: converted fiber loss " << converted.attenuation_db_per_km
        << " dB/km is not below raw loss " << raw.attenuation_db_per_km << " dB/km";
    throw DomainError(msg.str());
  }
  return -10.0 * std::log10(efficiency) / gain;
}

struct LinkBudget {
  double source_probability;  ///< heralded entanglement probability per attempt
  double repetition_rate_hz;
  std::vector<ConversionStage> qfc_chain;
  FiberChannel fiber;
  double length_km;
  double detector_efficiency;

  void validate() const {
    for (double p : {source_probability, detector_efficiency})
      if (!(p >= 0.0 && p <= 1.0)) throw DomainError("link budget probabilities must lie in [0, 1]");
    if (!(repetition_rate_hz >= 0.0)) throw DomainError("repetition rate must be non-negative");
    if (!(length_km >= 0.0)) throw DomainError("fiber length must be non-negative");
  }
};

/// Detected entanglement events per second.
inline double end_to_end_rate(const LinkBudget& b) {
  b.validate();
  return b.repetition_rate_hz * b.source_probability * chain_efficiency(b.qfc_chain) *
         transmission(b.fiber, b.length_km) * b.detector_efficiency;
}

}  // namespace ionlink

#endif
