#pragma once

#include <stdexcept>
#include <string>

namespace tcknot {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed sPD / polynomial / CSV text.
class ParseError : public Error {
 public:
  using Error::Error;
};

/// Well-formed input that violates a structural invariant.
class ValidationError : public Error {
 public:
  ValidationError(std::string kind, const std::string& what)
      : Error(what), kind_(std::move(kind)) {}
  /// Short machine-readable tag, e.g. "pairing", "non-spherical", "not-a-knot".
  const std::string& kind() const { return kind_; }

 private:
  std::string kind_;
};

/// A move site no longer matches, or its height side condition fails.
class MoveError : public Error {
 public:
  using Error::Error;
};

/// A computation exceeded its configured budget.
class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

/// An internal consistency check failed (e.g. a diagram without exactly two natural orientations).
class ConsistencyError : public Error {
 public:
  using Error::Error;
};

}  // namespace tcknot
