#pragma once

#include <stdexcept>
#include <string>

namespace hilbert {

enum class ErrorKind {
  DimMismatch,
  IndexOutOfRange,
  InvalidValue,
  NotHermitian,
  NoConvergence,
  NonSquare,
  NotInjective,
  NotInvertible,
  Inconsistent,
  NotOrthonormalBasis,
  UnknownCheckName,
  LexError,
  ParseError,
  TypeError,
  UnboundIdentifier,
  Rebinding,
};

const char* to_string(ErrorKind kind);

// 1-based source position; {0, 0} when the error has no location.
struct SourcePos {
  int line = 0;
  int column = 0;
  bool valid() const { return line > 0; }
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message, SourcePos pos = {});

  ErrorKind kind() const { return kind_; }
  SourcePos pos() const { return pos_; }
  const std::string& message() const { return message_; }

 private:
  ErrorKind kind_;
  SourcePos pos_;
  std::string message_;
};

[[noreturn]] void fail(ErrorKind kind, const std::string& message, SourcePos pos = {});

}  // namespace hilbert
