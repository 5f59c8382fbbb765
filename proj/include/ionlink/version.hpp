#ifndef IONLINK_VERSION_HPP
#define IONLINK_VERSION_HPP

#include <string>

#include "ionlink/dispersion.hpp"

namespace ionlink {

inline constexpr const char* kVersion = "0.1.0";

inline std::string version_string() {
  return std::string("ionlink ") + kVersion + " (dispersion data " + std::string(kDispersionDataVersion) + ")";
}

}  // namespace ionlink

#endif
