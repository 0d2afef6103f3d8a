#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace qmon {

enum class ErrorCode {
  band_overflow,
  guard_gap_violation,
  unknown_channel,
  no_paired_channel,
  address_out_of_range,
  not_a_ring,
  dangling_device,
  duplicate_port,
  same_access_network,
  unreachable,
  no_free_switch_port,
  no_return_possible,
  missing_component_spec,
  uncalibrated_model,
  underdetermined,
  non_physical_fit,
  zero_detections,
  invalid_request,
  parse_error,
};

const char* to_string(ErrorCode code);

/// Exception carrying a structured error code; the CLI maps codes to exit codes.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(to_string(code)) + ": " + message),
        code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

struct Issue {
  ErrorCode code;
  std::string message;
};

/// Raised by validating builders; collects every issue found, not just the first.
class ValidationError : public Error {
 public:
  ValidationError(ErrorCode code, const std::string& message, std::vector<Issue> issues)
      : Error(code, message), issues_(std::move(issues)) {}

  const std::vector<Issue>& issues() const noexcept { return issues_; }

 private:
  std::vector<Issue> issues_;
};

}  // namespace qmon
