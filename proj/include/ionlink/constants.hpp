#ifndef IONLINK_CONSTANTS_HPP
#define IONLINK_CONSTANTS_HPP

namespace ionlink::constants {
inline constexpr double kElementaryCharge = 1.602176634e-19;  // C, exact
inline constexpr double kAtomicMassUnit = 1.66053906660e-27;  // kg, CODATA 2018
inline constexpr double kSpeedOfLight = 299'792'458.0;        // m/s, exact
}  // namespace ionlink::constants

#endif
