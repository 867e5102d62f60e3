// Error type shared by every rhythmform module.

#pragma once

#include <stdexcept>
#include <string>

namespace rhythmform {

/// Broad failure category. The CLI maps each kind to a stable exit code.
enum class ErrorKind {
  kArgument,
  kParse,
  kUnsupportedFormat,
  kValidation,
  kEmptySeries,
  kEmptyPiece,
  kInsufficientLength,
  kComparability,
  kIo,
};

/// Returns a short lowercase name for an error kind ("parse", "validation", ...).
const char* errorKindName(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace rhythmform
