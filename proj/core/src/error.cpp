#include "abps/error.hpp"

namespace abps {

std::string_view error_name(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::MalformedSymbol: return "MalformedSymbol";
    case ErrorKind::NotALevi: return "NotALevi";
    case ErrorKind::InvalidCharacter: return "InvalidCharacter";
    case ErrorKind::InvalidLabel: return "InvalidLabel";
    case ErrorKind::RankMismatch: return "RankMismatch";
    case ErrorKind::UnrecognizedStructure: return "UnrecognizedStructure";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::TypeMismatch: return "TypeMismatch";
    case ErrorKind::InvalidEnhancement: return "InvalidEnhancement";
    case ErrorKind::SyntaxError: return "SyntaxError";
    case ErrorKind::UnknownCharacter: return "UnknownCharacter";
  }
  return "Error";
}

Error::Error(ErrorKind kind, const std::string& what)
    : std::runtime_error(what), kind_(kind) {}

SyntaxError::SyntaxError(std::size_t position, const std::string& what)
    : Error(ErrorKind::SyntaxError, what + " at position " + std::to_string(position)),
      position_(position) {}

void fail(ErrorKind kind, const std::string& what) { throw Error(kind, what); }

}  // namespace abps
