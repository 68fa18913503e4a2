#pragma once

#include <ostream>

namespace kummer7::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitMismatch = 1;
inline constexpr int kExitUsage = 2;

/// Entry point of the kummer7 tool: subcommands verify, eta, hodge, fibers, count, identities.
/// Returns the process exit status (0 ok, 1 mismatch or failed identity, 2 usage error).
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace kummer7::cli
