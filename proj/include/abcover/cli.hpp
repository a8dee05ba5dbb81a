#pragma once

#include <ostream>

namespace abcover::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitVerificationFailed = 1;
inline constexpr int kExitUsage = 2;

/// Entry point of the abcover tool, with injectable streams for testing.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace abcover::cli
