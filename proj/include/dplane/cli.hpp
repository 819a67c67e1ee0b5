#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace dplane {

// Full command dispatch; returns the process exit code. Verdict logic lives
// in the library calls, this layer only parses arguments and formats output.
// Exit codes: 0 success or affirmative verdict, 1 negative verdict or failed
// precondition, 2 undecided within budget, 64 usage, 65 unparseable data,
// 66 unreadable file, 70 internal inconsistency.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace dplane
