#pragma once

#include <stdexcept>
#include <string>

namespace rcft {

/// Invalid configuration value. field() names the offending key.
class ConfigError : public std::invalid_argument {
 public:
  ConfigError(std::string field, const std::string& what)
      : std::invalid_argument(field + ": " + what), field_(std::move(field)) {}

  const std::string& field() const noexcept { return field_; }

 private:
  std::string field_;
};

/// Argument outside the domain of an operation (negative bits, empty head set, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Node id not present in the structure being queried.
class LookupError : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

/// No hop path between two nodes.
class PathError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Every node is dead; no further rounds can run.
class SimulationOver : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace rcft
