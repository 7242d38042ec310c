// The command-line surface. Kept as a library call so tests can drive it
// with in-memory streams.
#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace morseforge {

/// Exit codes: 0 success, 1 domain error, 2 usage error.
int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
            std::ostream& err);

}  // namespace morseforge
