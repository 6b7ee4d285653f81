#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace singhodge::cli {

/// Entry point shared by main() and the in-process CLI tests.
/// `args` excludes the program name. Exit codes: 0 ok, 1 parse error,
/// 2 not convenient, 3 invalid Jordan data, 4 property failure,
/// 5 corpus failure.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace singhodge::cli
