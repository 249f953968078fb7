#pragma once

#include <iosfwd>

namespace hopfcalc {

/// Entry point of the `hopfcalc` command. Returns the process exit code:
/// 0 success, 1 usage error, 2 input parse or validation error, 3 oracle
/// unavailable or disagreeing.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace hopfcalc
