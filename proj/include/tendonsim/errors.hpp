#ifndef TENDONSIM_ERRORS_HPP
#define TENDONSIM_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace tendonsim {

// Geometry collapsed to a state where the model is undefined
// (coincident wire anchors, zero-length path segments, ...).
struct DegenerateGeometryError : std::domain_error {
  explicit DegenerateGeometryError(const std::string& what) : std::domain_error(what) {}
};

// Scenario/configuration input is malformed or incomplete. CLI exit code 2.
struct ConfigError : std::runtime_error {
  explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

// A computation produced NaN or otherwise lost numeric meaning. CLI exit code 3.
struct NumericError : std::runtime_error {
  explicit NumericError(const std::string& what) : std::runtime_error(what) {}
};

// Filesystem failure while emitting artifacts. CLI exit code 4.
struct IoError : std::runtime_error {
  explicit IoError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace tendonsim

#endif  // TENDONSIM_ERRORS_HPP
