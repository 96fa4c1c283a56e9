#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ame {

/// Parses and runs one command; args excludes the program name. Returns the
/// process exit code: 0 affirmative, 1 negative, 2 error. The JSON payload
/// goes to out (or the --out file), human diagnostics go to err. Failures
/// put a one-line {"error":{"code","message"}} object on out and return 2.
int run_cli(const std::vector<std::string>& args, std::istream& in,
            std::ostream& out, std::ostream& err);

}  // namespace ame
