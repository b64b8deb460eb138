#pragma once

#include <istream>
#include <ostream>

namespace reptile {

/// The reptile-forge command line. JSON results go to stdout (or --out), summaries to `err`.
/// Returns the exit code: 0 success, 1 verification failure, 2 usage or input error.
int run_cli(int argc, const char* const* argv, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace reptile
