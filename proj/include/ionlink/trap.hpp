#ifndef IONLINK_TRAP_HPP
#define IONLINK_TRAP_HPP

// Radial confinement in a linear Paul trap (pseudopotential approximation).

#include <cmath>
#include <numbers>

#include "ionlink/constants.hpp"
#include "ionlink/error.hpp"

namespace ionlink {

/// SI units throughout. omega_rf is the angular RF frequency (2 pi f).
struct TrapConfig {
  double v0;        ///< RF amplitude [V]
  double omega_rf;  ///< [rad/s]
  double r;         ///< ion-electrode distance [m]
  double eta;       ///< geometric efficiency, 1 for hyperbolic electrodes
  double mass;      ///< [kg]
  double charge = constants::kElementaryCharge;  ///< [C]

  void validate() const {
    if (!(v0 > 0.0 && omega_rf > 0.0 && r > 0.0 && mass > 0.0 && charge > 0.0))
      throw DomainError("trap parameters must be strictly positive");
    if (!(eta > 0.0 && eta <= 1.0)) throw DomainError("eta must lie in (0, 1]");
  }

  static TrapConfig from_lab_units(double v0_volts, double freq_mhz, double r_um, double eta, double mass_amu) {
    TrapConfig cfg{v0_volts, 2.0 * std::numbers::pi * freq_mhz * 1e6, r_um * 1e-6, eta,
                   mass_amu * constants::kAtomicMassUnit};
    cfg.validate();
    return cfg;
  }
};

/// psi = e^2 V0^2 eta^2 (x^2 + y^2) / (4 m r^4 Omega^2), in joules.
inline double pseudopotential(const TrapConfig& cfg, double x, double y) {
  cfg.validate();
  const double e_v_eta = cfg.charge * cfg.v0 * cfg.eta;
  const double r2 = cfg.r * cfg.r;
  return e_v_eta * e_v_eta * (x * x + y * y) / (4.0 * cfg.mass * r2 * r2 * cfg.omega_rf * cfg.omega_rf);
}

/// omega_s = e V0 eta / (sqrt2 m r^2 Omega), in rad/s.
inline double secular_frequency(const TrapConfig& cfg) {
  cfg.validate();
  return cfg.charge * cfg.v0 * cfg.eta / (std::numbers::sqrt2 * cfg.mass * cfg.r * cfg.r * cfg.omega_rf);
}

}  // namespace ionlink

#endif
