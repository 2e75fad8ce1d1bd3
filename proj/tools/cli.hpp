#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace pquot::cli {

/// Runs the pquot command line (args excludes the program name). Returns the
/// process exit code: 0 success, 1 violations or computation failure, 2 bad
/// input.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace pquot::cli
