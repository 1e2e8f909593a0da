#include "hilbert/error.hpp"

namespace hilbert {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::DimMismatch: return "DimMismatch";
    case ErrorKind::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorKind::InvalidValue: return "InvalidValue";
    case ErrorKind::NotHermitian: return "NotHermitian";
    case ErrorKind::NoConvergence: return "NoConvergence";
    case ErrorKind::NonSquare: return "NonSquare";
    case ErrorKind::NotInjective: return "NotInjective";
    case ErrorKind::NotInvertible: return "NotInvertible";
    case ErrorKind::Inconsistent: return "Inconsistent";
    case ErrorKind::NotOrthonormalBasis: return "NotOrthonormalBasis";
    case ErrorKind::UnknownCheckName: return "UnknownCheckName";
    case ErrorKind::LexError: return "LexError";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::TypeError: return "TypeError";
    case ErrorKind::UnboundIdentifier: return "UnboundIdentifier";
    case ErrorKind::Rebinding: return "Rebinding";
  }
  return "Error";
}

namespace {

std::string compose_what(ErrorKind kind, const std::string& message, SourcePos pos) {
  std::string out = to_string(kind);
  if (pos.valid()) {
    out += " at " + std::to_string(pos.line) + ":" + std::to_string(pos.column);
  }
  out += ": " + message;
  return out;
}

}  // namespace

Error::Error(ErrorKind kind, const std::string& message, SourcePos pos)
    : std::runtime_error(compose_what(kind, message, pos)), kind_(kind), pos_(pos), message_(message) {}

void fail(ErrorKind kind, const std::string& message, SourcePos pos) {
  throw Error(kind, message, pos);
}

}  // namespace hilbert
