#include "sharptrace/errors.hpp"

namespace sharptrace {

const char* to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::Usage: return "usage";
    case ErrorKind::Domain: return "domain";
    case ErrorKind::UnsupportedRegime: return "unsupported-regime";
    case ErrorKind::Convergence: return "convergence";
    case ErrorKind::Structural: return "structural";
    case ErrorKind::Accuracy: return "accuracy";
    case ErrorKind::Io: return "io";
  }
  return "unknown";
}

}  // namespace sharptrace
