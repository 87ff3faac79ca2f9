#pragma once

#include <iosfwd>

namespace sympstairs {

/// Exit codes: 0 success, 1 runtime or I/O failure (including failed verify
/// checks), 2 usage error.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace sympstairs
