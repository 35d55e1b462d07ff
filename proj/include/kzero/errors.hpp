#pragma once

#include <stdexcept>
#include <string>

namespace kzero {

// Input outside an operation's mathematical domain (non-squarefree d,
// zero polynomial, wrong degree, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Operands built over different parameters (quadratic fields, orders,
// base abelian varieties) were combined.
class ParameterMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Work would exceed a configured bound.
class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A hypothesis required by an operation does not hold (e.g. a reducible
// Weil polynomial passed where simplicity is assumed).
class PreconditionError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// Frobenius trace that cannot come from an abelian surface over F_p.
class InvalidEigenvalue : public DomainError {
 public:
  using DomainError::DomainError;
};

class DeductionRefused : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed dataset; `where` names the offending field.
class InputError : public std::runtime_error {
 public:
  InputError(std::string where, const std::string& what)
      : std::runtime_error(where + ": " + what), where_(std::move(where)) {}

  const std::string& where() const noexcept { return where_; }

 private:
  std::string where_;
};

}  // namespace kzero
