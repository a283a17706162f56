#include "lielat/error.hpp"

namespace lielat {

const char* to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::InvalidInput: return "InvalidInput";
    case ErrorKind::DenominatorZero: return "DenominatorZero";
    case ErrorKind::ZeroInput: return "ZeroInput";
    case ErrorKind::ZeroInverse: return "ZeroInverse";
    case ErrorKind::PrecisionLoss: return "PrecisionLoss";
    case ErrorKind::UnsupportedPrime: return "UnsupportedPrime";
    case ErrorKind::NotSymmetric: return "NotSymmetric";
    case ErrorKind::Degenerate: return "Degenerate";
    case ErrorKind::ValuationMismatch: return "ValuationMismatch";
    case ErrorKind::NotLie: return "NotLie";
    case ErrorKind::NotSubalgebra: return "NotSubalgebra";
    case ErrorKind::NotDiagonal: return "NotDiagonal";
    case ErrorKind::PreconditionViolated: return "PreconditionViolated";
    case ErrorKind::InvalidCanonicalForm: return "InvalidCanonicalForm";
    case ErrorKind::NotIndexPSelfSimilar: return "NotIndexPSelfSimilar";
    case ErrorKind::NotResiduallyNilpotent: return "NotResiduallyNilpotent";
    case ErrorKind::InvalidParameters: return "InvalidParameters";
    case ErrorKind::NotAnIdeal: return "NotAnIdeal";
    case ErrorKind::PathDisagreement: return "PathDisagreement";
  }
  return "Unknown";
}

}  // namespace lielat
