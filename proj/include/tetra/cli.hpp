#pragma once

#include <iosfwd>

namespace tetra::cli {

enum ExitCode : int { kOk = 0, kParseError = 2, kPrecondition = 3, kNumerical = 4 };

/// Runs one CLI invocation. Input is read from the named file or from `in`.
int run(int argc, const char* const* argv, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace tetra::cli
