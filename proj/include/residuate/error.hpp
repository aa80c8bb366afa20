#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace residuate {

/// Error categories surfaced by the library. The string form is what the CLI
/// writes into its machine-readable error object.
enum class ErrorCode {
  instance_mismatch,
  dimension_mismatch,
  shape_mismatch,
  unknown_label,
  duplicate_label,
  invalid_value,
  not_under_approximating,
  not_a_member,
  non_enumerable,
  guard_exceeded,
  empty_grid,
  not_a_category,
  parse_error,
  unknown_quantale,
  io_error,
  usage_error,
  check_failed,
};

inline const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::instance_mismatch: return "instance-mismatch";
    case ErrorCode::dimension_mismatch: return "dimension-mismatch";
    case ErrorCode::shape_mismatch: return "shape-mismatch";
    case ErrorCode::unknown_label: return "unknown-label";
    case ErrorCode::duplicate_label: return "duplicate-label";
    case ErrorCode::invalid_value: return "invalid-value";
    case ErrorCode::not_under_approximating: return "not-under-approximating";
    case ErrorCode::not_a_member: return "not-a-member";
    case ErrorCode::non_enumerable: return "non-enumerable";
    case ErrorCode::guard_exceeded: return "guard-exceeded";
    case ErrorCode::empty_grid: return "empty-grid";
    case ErrorCode::not_a_category: return "not-a-category";
    case ErrorCode::parse_error: return "parse-error";
    case ErrorCode::unknown_quantale: return "unknown-quantale";
    case ErrorCode::io_error: return "io-error";
    case ErrorCode::usage_error: return "usage-error";
    case ErrorCode::check_failed: return "check-failed";
  }
  return "unknown";
}

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace residuate
