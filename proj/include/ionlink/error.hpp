#ifndef IONLINK_ERROR_HPP
#define IONLINK_ERROR_HPP

#include <stdexcept>
#include <string>

namespace ionlink {

/// Precondition or physical-validity violation in a module input.
class DomainError : public std::domain_error {
public:
  using std::domain_error::domain_error;
};

/// A computation that cannot be completed numerically (singular system etc).
class NumericError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Consecutive conversion stages whose wavelengths do not line up.
class ChainError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Malformed data or config file.
class ParseError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

}  // namespace ionlink

#endif
