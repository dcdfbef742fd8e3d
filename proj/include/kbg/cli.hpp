#pragma once

#include <iosfwd>

namespace kbg {

/// Command-line entry point, stream-injected so tests can drive it directly.
/// Exit codes: 0 success, 1 usage error or failed verification, 2 malformed
/// input (reported with its line number), 3 disconnected graph handed to a
/// classifier.
int cli_main(int argc, const char* const* argv, std::istream& in, std::ostream& out,
             std::ostream& err);

}  // namespace kbg
