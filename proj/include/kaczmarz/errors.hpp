#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace kaczmarz {

// Raised when a domain object is constructed from invalid values. `field()`
// names the offending input so callers can report it verbatim.
class ValidationError : public std::invalid_argument {
 public:
  ValidationError(std::string field, const std::string& message)
      : std::invalid_argument(field + ": " + message), field_(std::move(field)) {}

  const std::string& field() const noexcept { return field_; }

 private:
  std::string field_;
};

class NonConsecutiveStep : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

class WindowMisaligned : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

class DimensionMismatch : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

class UnknownLabel : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

}  // namespace kaczmarz
