#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace eglocal::cli {

/// Runs the command line `args` (program name excluded). Exit codes: 0 clean,
/// 1 some violation or failed check, 2 usage or input error.
int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace eglocal::cli
