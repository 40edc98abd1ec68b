#pragma once

#include <stdexcept>
#include <string>

namespace nlcut {

enum class ErrorCode {
  parse_error,
  self_loop,
  negative_weight,
  overlapping_sets,
  isolated_vertex,
  zero_measure,
  degenerate_denominator,
  disconnected,
  too_large,
  bad_k,
  zero_vector,
  nonconstant_required,
  not_verified,
  not_in_omega,
  unknown_problem,
  invalid_argument,
};

const char* to_string(ErrorCode code);

/// Domain error raised by every nlcut operation. The CLI maps it to exit code 1.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

class ParseError : public Error {
 public:
  ParseError(int line, const std::string& message)
      : Error(ErrorCode::parse_error, "line " + std::to_string(line) + ": " + message),
        line_(line) {}

  int line() const noexcept { return line_; }

 private:
  int line_;
};

}  // namespace nlcut
