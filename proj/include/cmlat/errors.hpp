#pragma once

#include <stdexcept>
#include <string>

namespace cmlat {

/// Error categories mapped to CLI exit codes.
enum class ErrorKind {
  InvalidInput = 1,           // malformed data, schema violations, precondition failures
  TruncationInsufficient = 2, // no conductor exponent fits below N - margin
  FieldTooSmall = 3,          // a scalar sweep exhausted the ground field
  BudgetExceeded = 4,         // enumeration or search exceeded the configured cap
};

class CmError : public std::runtime_error {
public:
  CmError(ErrorKind kind, const std::string& msg)
      : std::runtime_error(msg), kind_(kind) {}
  ErrorKind kind() const { return kind_; }
  int exit_code() const { return static_cast<int>(kind_); }

private:
  ErrorKind kind_;
};

struct InvalidInputError : CmError {
  explicit InvalidInputError(const std::string& msg)
      : CmError(ErrorKind::InvalidInput, msg) {}
};

struct TruncationError : CmError {
  explicit TruncationError(const std::string& msg)
      : CmError(ErrorKind::TruncationInsufficient, msg) {}
};

/// Carries the suggested extension degree for a retry.
struct FieldTooSmallError : CmError {
  FieldTooSmallError(const std::string& msg, int suggested_degree)
      : CmError(ErrorKind::FieldTooSmall, msg),
        suggested_degree(suggested_degree) {}
  int suggested_degree;
};

struct BudgetError : CmError {
  explicit BudgetError(const std::string& msg)
      : CmError(ErrorKind::BudgetExceeded, msg) {}
};

} // namespace cmlat
