#pragma once

#include <stdexcept>
#include <string>

namespace sulsim {

/// Input outside the mathematical domain of a model (e.g. elevation > 90°).
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Configuration violates an invariant. `field()` names the offending key.
class ConfigError : public std::invalid_argument {
public:
    ConfigError(std::string field, const std::string& what)
        : std::invalid_argument(field + ": " + what), field_(std::move(field)) {}

    const std::string& field() const noexcept { return field_; }

private:
    std::string field_;
};

/// Command-line arguments are inconsistent (bad sweep range, missing option).
class UsageError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Scenario document could not be parsed.
class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Scenario document carries an unsupported schema_version.
class VersionError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace sulsim
