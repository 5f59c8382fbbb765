#ifndef IONLINK_ENTANGLEMENT_HPP
#define IONLINK_ENTANGLEMENT_HPP

// Ion-photon entangled states and the figures of merit for the three
// excitation schemes: D3/2 shelving, weak pulsed and strong pulsed excitation.

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Dense>

#include "ionlink/atomic_model.hpp"
#include "ionlink/emission.hpp"
#include "ionlink/error.hpp"

namespace ionlink {

using Complex = std::complex<double>;
using DensityMatrix = Eigen::Matrix4cd;
using StateVector = Eigen::Vector4cd;

/// Photon polarization (H, V) tensor ion qubit (|0> = S1/2 m=-1/2,
/// |1> = S1/2 m=+1/2). Basis order |H0>, |H1>, |V0>, |V1>.
enum BasisIndex : int { kH0 = 0, kH1 = 1, kV0 = 2, kV1 = 3 };

class TwoQubitState {
public:
  static constexpr double kTolerance = 1e-10;

  explicit TwoQubitState(const DensityMatrix& rho) : rho_(rho) { validate(); }

  static TwoQubitState pure(const StateVector& psi) {
    const double norm = psi.norm();
    if (norm == 0.0) throw DomainError("cannot build a state from the zero vector");
    const StateVector unit = psi / norm;
    return TwoQubitState(unit * unit.adjoint());
  }

  const DensityMatrix& rho() const noexcept { return rho_; }

  double purity() const { return (rho_ * rho_).trace().real(); }
  bool is_pure() const { return std::abs(purity() - 1.0) <= kTolerance; }

private:
  void validate() const {
    if (std::abs(rho_.trace() - Complex(1.0, 0.0)) > kTolerance)
      throw DomainError("density matrix trace must be 1");
    if ((rho_ - rho_.adjoint()).cwiseAbs().maxCoeff() > kTolerance)
      throw DomainError("density matrix must be Hermitian");
    const Eigen::SelfAdjointEigenSolver<DensityMatrix> eig(rho_);
    if (eig.eigenvalues().minCoeff() < -kTolerance)
      throw DomainError("density matrix must be positive semidefinite");
  }

  DensityMatrix rho_;
};

/// (|V>|1> + |H>|0>)/sqrt2: emission from P1/2 m=+1/2.
inline TwoQubitState psi_g() {
  StateVector v = StateVector::Zero();
  v[kV1] = v[kH0] = 1.0 / std::sqrt(2.0);
  return TwoQubitState::pure(v);
}

/// (|H>|1> + |V>|0>)/sqrt2: emission from P1/2 m=-1/2.
inline TwoQubitState psi_b() {
  StateVector v = StateVector::Zero();
  v[kH1] = v[kV0] = 1.0 / std::sqrt(2.0);
  return TwoQubitState::pure(v);
}

/// Re tr(rho_a rho_b); for two pure states this is |<a|b>|^2.
inline double overlap(const TwoQubitState& a, const TwoQubitState& b) {
  return (a.rho() * b.rho()).trace().real();
}

/// F = <psi|rho|psi> for a pure target |psi>.
inline double fidelity(const TwoQubitState& target, const TwoQubitState& actual) {
  if (!target.is_pure()) throw DomainError("fidelity target must be a pure state");
  return std::clamp(overlap(target, actual), 0.0, 1.0);
}

/// Classical mixture of psi_g and psi_b weighted by p_g and p_b.
inline TwoQubitState mixed_state(double p_g, double p_b) {
  if (!(p_g >= 0.0 && p_b >= 0.0)) throw DomainError("probabilities must be non-negative");
  const double total = p_g + p_b;
  if (!(total > 0.0)) throw DomainError("p_g + p_b must be positive");
  return TwoQubitState((p_g / total) * psi_g().rho() + (p_b / total) * psi_b().rho());
}

/// Amplitudes of the three D3/2 decays that drive re-excitation:
///   c1: P(+1/2) -> D(+3/2), back to the initialised state
///   c2: P(+1/2) -> D(+1/2), the pi decay that leads to psi_b
///   c3: P(-1/2) -> D(+1/2), repeat of the bad cycle
class CycleCoefficients {
public:
  CycleCoefficients(double c1, double c2, double c3) : c_{c1, c2, c3} {
    for (double c : c_)
      if (!(c * c >= 0.0 && c * c <= 1.0)) throw DomainError("cycle coefficients must have c^2 in [0, 1]");
  }

  static CycleCoefficients from_model(const BranchingModel& model) {
    const ZeemanState p_up{Level::P12, +1};
    const ZeemanState p_dn{Level::P12, -1};
    const ZeemanState d_32{Level::D32, +3};
    const ZeemanState d_12{Level::D32, +1};
    return {model.cg(p_up, d_32), model.cg(p_up, d_12), model.cg(p_dn, d_12)};
  }

  double c1() const noexcept { return c_[0]; }
  double c2() const noexcept { return c_[1]; }
  double c3() const noexcept { return c_[2]; }

private:
  std::array<double, 3> c_;
};

struct SuccessProbabilities {
  double p_g;
  double p_b;
  double p_dark;
};

/// Geometric series for repeated 650 nm re-excitation:
///   p_g = Br493 / (1 - c1^2 Br650)
///   p_b = Br493 Br650 c2^2 / (1 - c3^2 Br650)
/// p_b is the closed form as commonly quoted. The absorbing-chain solution
/// (markov_chain.hpp) carries an extra 1/(1 - c1^2 Br650) on the bad branch.
inline SuccessProbabilities geometric_success(const BranchingModel& model, const CycleCoefficients& c) {
  const double br_493 = model.br_493();
  const double br_650 = model.br_650();
  const double good_den = 1.0 - c.c1() * c.c1() * br_650;
  const double bad_den = 1.0 - c.c3() * c.c3() * br_650;
  if (!(good_den > 0.0) || !(bad_den > 0.0)) throw DomainError("geometric series does not converge");
  const double p_g = br_493 / good_den;
  const double p_b = br_493 * br_650 * c.c2() * c.c2() / bad_den;
  return {p_g, p_b, 1.0 - p_g - p_b};
}

enum class Scheme { DShelving, Weak, Strong };

inline std::string_view to_string(Scheme s) noexcept {
  switch (s) {
    case Scheme::DShelving: return "d-shelving";
    case Scheme::Weak: return "weak";
    case Scheme::Strong: return "strong";
  }
  return "?";
}

struct SchemeSpec {
  Scheme name;
  double p_e;    ///< excitation probability to P1/2
  double p_s;    ///< decay probability to S1/2
  double f_max;  ///< fidelity in the zero-NA limit

  SchemeSpec(Scheme scheme, double pe, double ps, double fmax) : name(scheme), p_e(pe), p_s(ps), f_max(fmax) {
    for (double v : {p_e, p_s, f_max})
      if (!(v >= 0.0 && v <= 1.0)) throw DomainError("scheme parameters must lie in [0, 1]");
  }

  double pe_ps() const noexcept { return p_e * p_s; }
};

/// Reference re-excitation outcome for the shelving scheme.
inline constexpr double kShelvingGood = 0.844;
inline constexpr double kShelvingBad = 0.103;
inline constexpr double kPulsedExcitationWeak = 0.2;

/// Shelving scheme: re-excitation folds into P_e P_s = p_good + p_bad and
/// F_max = p_good / (p_good + p_bad).
inline SchemeSpec d_shelving_scheme(double p_good = kShelvingGood, double p_bad = kShelvingBad) {
  return {Scheme::DShelving, 1.0, p_good + p_bad, fidelity(psi_g(), mixed_state(p_good, p_bad))};
}

inline SchemeSpec weak_scheme(const BranchingModel& model = default_barium_model()) {
  return {Scheme::Weak, kPulsedExcitationWeak, model.br_493(), 1.0};
}

inline SchemeSpec strong_scheme(const BranchingModel& model = default_barium_model()) {
  return {Scheme::Strong, 1.0, model.br_493(), 1.0};
}

/// Loss of fidelity per unit collected solid-angle fraction from sigma/pi
/// polarization mixing.
inline constexpr double kMixingSlope = 0.24;

inline double fidelity_vs_na(double f_max, double na, CollectionModel model = CollectionModel::Quadratic) {
  return f_max - kMixingSlope * collection_fraction(na, model);
}

inline double entanglement_probability(const SchemeSpec& spec, double na,
                                       CollectionModel model = CollectionModel::Quadratic) {
  return spec.pe_ps() * collection_fraction(na, model);
}

/// p = 1 - exp(-dt / tau).
inline double double_excitation_probability(double pulse_duration, double lifetime) {
  if (!(lifetime > 0.0)) throw DomainError("lifetime must be positive");
  if (!(pulse_duration >= 0.0)) throw DomainError("pulse duration must be non-negative");
  return -std::expm1(-pulse_duration / lifetime);
}

struct SchemeRow {
  SchemeSpec spec;
  double probability;  ///< P at the requested NA
  double fidelity;     ///< F at the requested NA
};

inline std::vector<SchemeRow> scheme_table(double na, const std::vector<SchemeSpec>& schemes,
                                           CollectionModel model = CollectionModel::Quadratic) {
  std::vector<SchemeRow> rows;
  for (const auto& s : schemes)
    rows.push_back({s, entanglement_probability(s, na, model), fidelity_vs_na(s.f_max, na, model)});
  return rows;
}

inline std::vector<SchemeRow> scheme_table(double na, CollectionModel model = CollectionModel::Quadratic) {
  return scheme_table(na, {d_shelving_scheme(), weak_scheme(), strong_scheme()}, model);
}

}  // namespace ionlink

#endif
