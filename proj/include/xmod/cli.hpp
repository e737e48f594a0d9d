#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace xmod::cli {

/// Runs one CLI command (check / fder / aut / actor / braided / roundtrip).
/// Returns the process exit code: 0 success, 1 validation failure,
/// 2 I/O or schema error, 3 enumeration cap exceeded.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace xmod::cli
