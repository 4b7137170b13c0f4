#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace mph::cli {

/// Exit codes of `mph`.
enum Exit : int { ok = 0, failure = 1, parse_error = 2, contract_error = 3, verification_failed = 4 };

/// Runs `mph` on argv-style arguments (args[0] is the program name). Reports go to `out`
/// unless written to a file, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace mph::cli
