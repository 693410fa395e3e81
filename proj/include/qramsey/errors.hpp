#pragma once

#include <stdexcept>
#include <string>

namespace qramsey {

// Input outside an operation's domain (non-Q word, P_infty point where P_f is
// required, malformed literal, space mismatch, ...).
class DomainError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// A word would exceed the configured bit cap.
class CapExceeded : public DomainError {
public:
    using DomainError::DomainError;
};

// Internal invariant broken. Never expected to fire; tests assert it doesn't.
class DefectError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

// A structured input violates a documented hypothesis. `clause` names it.
class PreconditionError : public std::invalid_argument {
public:
    PreconditionError(std::string clause, const std::string& what)
        : std::invalid_argument(what), clause_(std::move(clause)) {}

    const std::string& clause() const noexcept { return clause_; }

private:
    std::string clause_;
};

// Missing or inconsistent configuration, e.g. a rank-3 class without oracle.
class ConfigError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// A bounded search found no admissible word extending `prefix`.
class SearchExhausted : public std::runtime_error {
public:
    SearchExhausted(std::string prefix, const std::string& what)
        : std::runtime_error(what), prefix_(std::move(prefix)) {}

    const std::string& prefix() const noexcept { return prefix_; }

private:
    std::string prefix_;
};

}  // namespace qramsey
