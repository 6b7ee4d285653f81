#pragma once

#include <ostream>
#include <string>

namespace singhodge::cli {

/// Runs analyze on every *.json fixture in `dir`, compares the report
/// against the fixture's "expected" block (recursive subset match), writes
/// <name>.report.json beside each fixture and prints a pass/fail matrix.
/// Returns 0 when all fixtures pass, 5 otherwise.
int run_corpus(const std::string& dir, std::ostream& out, std::ostream& err);

}  // namespace singhodge::cli
