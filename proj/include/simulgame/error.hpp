#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace simulgame {

enum class ErrorCode {
  UnknownRuleset,
  LoopyGame,
  SizeLimit,
  DimensionMismatch,
  IllegalMove,
  NotTerminal,
  BadCordonSpec,
  BadParameters,
  BadStalk,
  SyntaxError,
  MixedOperators,
  BadLiteral,
  RefusesSum,
};

const char* error_code_name(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message);

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

/// Raised by the expression parser. `offset` is a byte offset into the input.
class ParseError : public Error {
 public:
  ParseError(ErrorCode code, std::size_t offset, std::vector<std::string> expected,
             const std::string& message);

  std::size_t offset() const noexcept { return offset_; }
  const std::vector<std::string>& expected() const noexcept { return expected_; }

 private:
  std::size_t offset_;
  std::vector<std::string> expected_;
};

}  // namespace simulgame
