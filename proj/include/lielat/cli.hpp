#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "lielat/error.hpp"

namespace lielat::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitInvalidInput = 2;
inline constexpr int kExitPrecisionLoss = 3;
inline constexpr int kExitUnsupportedPrime = 4;
inline constexpr int kExitPrecondition = 5;

int exit_code_for(ErrorKind kind);

/// args excludes the program name. Result JSON goes to out, error JSON to err.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace lielat::cli
