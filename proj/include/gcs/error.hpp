#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>

namespace gcs {

enum class ErrorCode {
  DuplicateId,
  UnknownEndpoint,
  SelfLoop,
  KindMismatch,
  BadValue,
  TooSmall,
  SyntaxError,
  MissingEdge,
  UnknownFixture,
  NotReducible,
  UnsupportedStep,
  EmptyIntersection,
  UnderDetermined,
  BadBranch,
  Parallel,
  Coincident,
  CoincidentPoints,
  LengthMismatch,
  MissingPlacement,
  Inconsistent,
  Io,
};

// snake_case names double as the machine-readable "reason" in CLI output.
constexpr std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::DuplicateId: return "duplicate_id";
    case ErrorCode::UnknownEndpoint: return "unknown_endpoint";
    case ErrorCode::SelfLoop: return "self_loop";
    case ErrorCode::KindMismatch: return "kind_mismatch";
    case ErrorCode::BadValue: return "bad_value";
    case ErrorCode::TooSmall: return "too_small";
    case ErrorCode::SyntaxError: return "syntax_error";
    case ErrorCode::MissingEdge: return "missing_edge";
    case ErrorCode::UnknownFixture: return "unknown_fixture";
    case ErrorCode::NotReducible: return "not_reducible";
    case ErrorCode::UnsupportedStep: return "unsupported_step";
    case ErrorCode::EmptyIntersection: return "empty_intersection";
    case ErrorCode::UnderDetermined: return "under_determined";
    case ErrorCode::BadBranch: return "bad_branch";
    case ErrorCode::Parallel: return "parallel";
    case ErrorCode::Coincident: return "coincident";
    case ErrorCode::CoincidentPoints: return "coincident_points";
    case ErrorCode::LengthMismatch: return "length_mismatch";
    case ErrorCode::MissingPlacement: return "missing_placement";
    case ErrorCode::Inconsistent: return "inconsistent";
    case ErrorCode::Io: return "io";
  }
  return "unknown";
}

/// Every failure in the library is reported as a gcs::Error carrying a code
/// and, where one exists, the entity or item the failure is about.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, std::string message, std::string subject = {})
      : std::runtime_error(std::move(message)), code_(code), subject_(std::move(subject)) {}

  ErrorCode code() const noexcept { return code_; }
  const std::string& subject() const noexcept { return subject_; }

 private:
  ErrorCode code_;
  std::string subject_;
};

}  // namespace gcs
