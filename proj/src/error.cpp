#include "rhythmform/error.h"

namespace rhythmform {

const char* errorKindName(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kArgument: return "argument";
    case ErrorKind::kParse: return "parse";
    case ErrorKind::kUnsupportedFormat: return "unsupported-format";
    case ErrorKind::kValidation: return "validation";
    case ErrorKind::kEmptySeries: return "empty-series";
    case ErrorKind::kEmptyPiece: return "empty-piece";
    case ErrorKind::kInsufficientLength: return "insufficient-length";
    case ErrorKind::kComparability: return "comparability";
    case ErrorKind::kIo: return "io";
  }
  return "unknown";
}

}  // namespace rhythmform
