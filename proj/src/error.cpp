#include "simulgame/error.hpp"

#include <utility>

namespace simulgame {

const char* error_code_name(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::UnknownRuleset: return "UnknownRuleset";
    case ErrorCode::LoopyGame: return "LoopyGame";
    case ErrorCode::SizeLimit: return "SizeLimit";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::IllegalMove: return "IllegalMove";
    case ErrorCode::NotTerminal: return "NotTerminal";
    case ErrorCode::BadCordonSpec: return "BadCordonSpec";
    case ErrorCode::BadParameters: return "BadParameters";
    case ErrorCode::BadStalk: return "BadStalk";
    case ErrorCode::SyntaxError: return "SyntaxError";
    case ErrorCode::MixedOperators: return "MixedOperators";
    case ErrorCode::BadLiteral: return "BadLiteral";
    case ErrorCode::RefusesSum: return "RefusesSum";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& message)
    : std::runtime_error(std::string(error_code_name(code)) + ": " + message), code_(code) {}

ParseError::ParseError(ErrorCode code, std::size_t offset, std::vector<std::string> expected,
                       const std::string& message)
    : Error(code, message), offset_(offset), expected_(std::move(expected)) {}

}  // namespace simulgame
