#pragma once

#include <stdexcept>
#include <string>

namespace lielat {

enum class ErrorKind {
  InvalidInput,
  DenominatorZero,
  ZeroInput,
  ZeroInverse,
  PrecisionLoss,
  UnsupportedPrime,
  NotSymmetric,
  Degenerate,
  ValuationMismatch,
  NotLie,
  NotSubalgebra,
  NotDiagonal,
  PreconditionViolated,
  InvalidCanonicalForm,
  NotIndexPSelfSimilar,
  NotResiduallyNilpotent,
  InvalidParameters,
  NotAnIdeal,
  PathDisagreement,
};

const char* to_string(ErrorKind kind) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace lielat
