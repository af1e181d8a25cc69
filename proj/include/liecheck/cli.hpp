#pragma once

#include <iosfwd>

namespace liecheck {

// Exit codes returned by run_cli.
inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;  // violation found or a check failed
inline constexpr int kExitUsage = 2;
inline constexpr int kExitUnknownCase = 3;

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace liecheck
