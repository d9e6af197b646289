#pragma once

#include <stdexcept>
#include <string>

namespace semidyn {

enum class ErrorCode {
  UnsupportedMap,
  ZeroArgument,
  AllSamplesOverflowed,
  ParseError,
  BudgetExceeded,
  RationalGeneratorsRejected,
  InvalidParameter,
  Io,
};

const char* to_string(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

/// Parse failures carry the byte offset of the offending token.
class ParseError : public Error {
 public:
  ParseError(std::size_t position, const std::string& message)
      : Error(ErrorCode::ParseError,
              "at position " + std::to_string(position) + ": " + message),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

}  // namespace semidyn
