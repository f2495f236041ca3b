#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace seqth::cli {

/// Runs the command line `seqth <args...>` (args excludes the program name).
/// Exit codes: 0 success / TRUE / PASS / ACCEPT, 1 UNKNOWN / FALSE / FAIL /
/// REJECT / bad input, 2 usage errors.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace seqth::cli
