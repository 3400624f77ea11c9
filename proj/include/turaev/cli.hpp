#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace turaev {

/// Entry point behind the `turaev` binary; also called directly by tests.
/// Exit codes: 0 all checks passed, 1 a law or comparison failed,
/// 2 usage or data error.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace turaev
