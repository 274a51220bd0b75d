#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace divr::cli {

/// Dispatches one invocation. Prints a single JSON document to `out`
/// (JSON-lines side files go to --out paths); usage errors print to `err`.
/// Exit codes: 0 success / positive decision, 2 negative decision, 1 error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace divr::cli
