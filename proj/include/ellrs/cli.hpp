#pragma once

#include <iosfwd>

namespace ellrs {

/// Exit codes: 0 success, 1 computational error (or failed verify suite),
/// 2 usage error.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace ellrs
