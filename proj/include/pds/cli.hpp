#pragma once

#include <iosfwd>

namespace pds::cli {

// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kPropertyViolated = 1;
inline constexpr int kUsageError = 2;

// Entry point of the `pds` tool. Subcommands: construct, verify, lines,
// spectrum, enumerate, classify, defining.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace pds::cli
