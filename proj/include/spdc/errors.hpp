#pragma once

#include <stdexcept>
#include <string>

namespace spdc {

/// Malformed, incomplete or invalid run configuration. Maps to exit code 2.
class ConfigError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// A numerical method could not reach its accuracy contract. Exit code 3.
class AccuracyError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// File system failure while reading or writing outputs. Exit code 4.
class IoError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

} // namespace spdc
