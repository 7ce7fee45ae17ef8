#pragma once

#include <stdexcept>
#include <string>

namespace qsing {

/// Input violates an operation's precondition (bad degree, malformed rep file).
class InvalidInput : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// Input is well formed but lies outside the regime where the quotient
/// classification applies. Reported by the CLI with exit code 3.
class DomainError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// The group contains quasi-reflections, so the age criterion does not apply.
class QuasiReflectionError : public DomainError {
public:
  using DomainError::DomainError;
};

/// Closure of a generator set exceeded the configured element cap.
class GroupTooLarge : public DomainError {
public:
  explicit GroupTooLarge(std::size_t cap)
      : DomainError("closure exceeds cap of " + std::to_string(cap) + " elements"),
        cap_(cap) {}
  std::size_t cap() const noexcept { return cap_; }

private:
  std::size_t cap_;
};

} // namespace qsing
