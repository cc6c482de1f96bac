#pragma once
#include <stdexcept>
#include <string>

namespace updsim {

/// A physical parameter is outside its admissible range.
class DomainError : public std::invalid_argument {
public:
  explicit DomainError(const std::string& what) : std::invalid_argument(what) {}
};

/// Inconsistent combination of otherwise valid inputs (e.g. a USD
/// measurement paired with a source it was not built for).
class ConfigError : public std::runtime_error {
public:
  explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

/// Malformed scenario file or command line.
class ParseError : public std::runtime_error {
public:
  explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

} // namespace updsim
