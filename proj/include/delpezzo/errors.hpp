#pragma once

#include <stdexcept>
#include <string>

namespace delpezzo {

/// Malformed or out-of-domain input (bad arity, zero coefficient, non-unit mod p, ...).
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// The operation refused to run rather than risk a wrong or truncated answer.
class RefusalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Trial division could not certify a factorization within the configured bound.
class UnfactorableError : public RefusalError {
 public:
  using RefusalError::RefusalError;
};

/// An exhaustive search would exceed its candidate budget.
class BudgetExceeded : public RefusalError {
 public:
  using RefusalError::RefusalError;
};

/// A result contradicts a theorem the computation relies on. Always a bug signal.
class VerificationFailure : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace delpezzo
