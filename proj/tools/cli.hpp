#pragma once

// Command-line front end: spectrum, wavefunction, verify and jmatrix.

#include <iosfwd>
#include <string>
#include <vector>

namespace trirep::cli {

/// Exit codes: 0 success, 1 invalid input or unsupported request, 2 a
/// verification check failed.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace trirep::cli
