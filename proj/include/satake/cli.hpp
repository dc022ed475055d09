#pragma once
// Command-line front end: verb dispatch over the catalog, descendant,
// classification, certification, and fixture layers. The entry point is
// stream-parameterized so tests can drive it in-process.

#include <iosfwd>
#include <string>
#include <vector>

namespace satake {

/// Execute one invocation (arguments without the program name), writing
/// results to `out` and diagnostics to `err`. Exit codes: 0 success, 1
/// malformed usage or input, 2 selftest mismatch, 3 violated internal
/// contract.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace satake
