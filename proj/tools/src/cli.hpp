#pragma once

#include <iosfwd>

namespace dfc::cli {

enum ExitCode : int {
    kSuccess = 0,
    kInputError = 2,
    kInconclusive = 3,
    kInternal = 4,
};

/// Runs one command line. Output goes to `out`, diagnostics to `err`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

} // namespace dfc::cli
