#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace abps {

enum class ErrorKind {
  MalformedSymbol,
  NotALevi,
  InvalidCharacter,
  InvalidLabel,
  RankMismatch,
  UnrecognizedStructure,
  DimensionMismatch,
  TypeMismatch,
  InvalidEnhancement,
  SyntaxError,
  UnknownCharacter,
};

std::string_view error_name(ErrorKind kind);

/// Domain error. The CLI prints name() on stderr and exits with status 1.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what);
  ErrorKind kind() const { return kind_; }
  std::string_view name() const { return error_name(kind_); }

 private:
  ErrorKind kind_;
};

class SyntaxError : public Error {
 public:
  SyntaxError(std::size_t position, const std::string& what);
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

[[noreturn]] void fail(ErrorKind kind, const std::string& what);

}  // namespace abps
