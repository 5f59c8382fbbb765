#ifndef IONLINK_EMISSION_HPP
#define IONLINK_EMISSION_HPP

// Dipole emission patterns on the sphere and collection-optic solid angles.
// Angles are measured from the quantization (dipole) axis.

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <string>
#include <string_view>

#include "ionlink/error.hpp"

namespace ionlink {

class EmissionDirection {
public:
  EmissionDirection(double theta, double phi) : theta_(theta), phi_(phi) {
    if (!(theta >= 0.0 && theta <= std::numbers::pi)) throw DomainError("theta must lie in [0, pi]");
    if (!(phi >= 0.0 && phi < 2.0 * std::numbers::pi)) throw DomainError("phi must lie in [0, 2pi)");
  }

  double theta() const noexcept { return theta_; }
  double phi() const noexcept { return phi_; }

private:
  double theta_;
  double phi_;
};

/// Unnormalised transverse field, components along theta-hat and phi-hat.
struct PolarizationVector {
  std::complex<double> e_theta;
  std::complex<double> e_phi;

  double intensity() const { return std::norm(e_theta) + std::norm(e_phi); }
};

/// <a|b>, conjugate-linear in a.
inline std::complex<double> inner(const PolarizationVector& a, const PolarizationVector& b) {
  return std::conj(a.e_theta) * b.e_theta + std::conj(a.e_phi) * b.e_phi;
}

namespace detail {

/// cos(theta) as sin(pi/2 - theta): exactly zero on the equator, where
/// std::cos(pi/2) leaves a 6e-17 residue.
inline double cos_polar(double theta) { return std::sin(std::numbers::pi / 2 - theta); }

}  // namespace detail

inline PolarizationVector pi_emission(const EmissionDirection& dir) {
  return {-std::sin(dir.theta()), 0.0};
}

/// sign = +1 for sigma+, -1 for sigma-.
inline PolarizationVector sigma_emission(const EmissionDirection& dir, int sign) {
  if (sign != 1 && sign != -1) throw DomainError("sigma sign must be +1 or -1");
  using namespace std::complex_literals;
  const auto phase = std::polar(1.0 / std::sqrt(2.0), sign * dir.phi());
  return {phase * detail::cos_polar(dir.theta()), phase * (static_cast<double>(sign) * 1i)};
}

/// <pi|sigma+-> = -sin(theta) cos(theta) e^{+-i phi} / sqrt2.
inline std::complex<double> polarization_overlap(const EmissionDirection& dir, int sign) {
  return inner(pi_emission(dir), sigma_emission(dir, sign));
}

enum class CollectionModel { Quadratic, ExactSolidAngle };

inline std::string_view to_string(CollectionModel m) noexcept {
  return m == CollectionModel::Quadratic ? "quadratic" : "exact";
}

class CollectionOptic {
public:
  explicit CollectionOptic(double na) : na_(na) {
    if (!(na > 0.0 && na <= 1.0)) throw DomainError("NA out of range: numerical aperture must lie in (0, 1]");
  }
  double na() const noexcept { return na_; }

private:
  double na_;
};

/// Collected fraction of an isotropic emitter, Omega / 4pi. Quadratic is
/// the small-angle form NA^2/4; ExactSolidAngle is (1 - cos(asin NA)) / 2.
inline double collection_fraction(double na, CollectionModel model = CollectionModel::Quadratic) {
  if (!(na >= 0.0 && na <= 1.0)) throw DomainError("NA out of range: " + std::to_string(na));
  if (model == CollectionModel::Quadratic) return 0.25 * na * na;
  // 1 - sqrt(1 - x^2) without cancellation at small x
  return 0.5 * na * na / (1.0 + std::sqrt(1.0 - na * na));
}

inline double collection_fraction(const CollectionOptic& optic, CollectionModel model = CollectionModel::Quadratic) {
  return collection_fraction(optic.na(), model);
}

/// Mean normalised |<pi|sigma+>|^2 over a lens cone of half-angle asin(NA)
/// looking along theta = pi/2, phi = 0, weighted by solid angle. Used only to
/// show that mixing grows with aperture; it does not reproduce the linear
/// fidelity slope.
inline double cone_averaged_mixing(double na, int radial_steps = 200, int azimuth_steps = 200) {
  if (!(na >= 0.0 && na <= 1.0)) throw DomainError("NA out of range: " + std::to_string(na));
  if (na == 0.0) return 0.0;
  const double half_angle = std::asin(na);
  double weighted = 0.0;
  double weight = 0.0;
  for (int i = 0; i < radial_steps; ++i) {
    const double alpha = (i + 0.5) * half_angle / radial_steps;
    for (int j = 0; j < azimuth_steps; ++j) {
      const double beta = (j + 0.5) * 2.0 * std::numbers::pi / azimuth_steps;
      // unit vector around the x axis, then back to spherical angles about z
      const double x = std::cos(alpha);
      const double y = std::sin(alpha) * std::cos(beta);
      const double z = std::sin(alpha) * std::sin(beta);
      double phi = std::atan2(y, x);
      if (phi < 0.0) phi += 2.0 * std::numbers::pi;
      const EmissionDirection dir(std::acos(std::clamp(z, -1.0, 1.0)), phi);
      const auto pi = pi_emission(dir);
      const auto sp = sigma_emission(dir, +1);
      const double norm = pi.intensity() * sp.intensity();
      const double mix = norm > 0.0 ? std::norm(inner(pi, sp)) / norm : 0.0;
      const double w = std::sin(alpha);
      weighted += w * mix;
      weight += w;
    }
  }
  return weighted / weight;
}

}  // namespace ionlink

#endif
