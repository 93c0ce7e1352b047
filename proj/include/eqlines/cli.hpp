#pragma once

#include <ostream>

namespace eqlines {

// Exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitVerification = 3;
inline constexpr int kExitViolation = 4;

// Entry point of the eqlines command line. Records go to `out` as JSON,
// diagnostics to `err`.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace eqlines
