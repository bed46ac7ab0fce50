// Command line front end.  One JSON document per invocation on stdout,
// logs to stderr only.  Exit codes: 0 ok, 1 rejected (a mathematically
// valid "no"), 2 usage or resource error.
//
// All arbitrary-precision integers are serialized as decimal strings;
// intervals as {lo, hi, precision} with outward-rounded decimal
// endpoints.  Output is deterministic byte for byte for identical inputs
// and flags, except the timing_ms field.

#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ppnkit {

inline constexpr const char* kPrecisionEnvVar = "PPNKIT_PRECISION";

// argv-style entry point (argv[0] is the program name).
int run_cli(const std::vector<std::string>& argv, std::ostream& out,
            std::ostream& err);

}  // namespace ppnkit
