#pragma once

#include <iosfwd>

namespace mss4 {

/// Command-line front end: verify | sample | potential | gauss | curvature |
/// solve | list. Returns the process exit code: 0 ok, 1 check failed,
/// 2 usage/config error. Reports are JSON on `out`; failures are emitted as
/// machine-readable error objects.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace mss4
