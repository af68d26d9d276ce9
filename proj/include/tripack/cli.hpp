#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "tripack/oracle.hpp"

namespace tripack::cli {

enum ExitCode : int {
  kOk = 0,
  kUsage = 1,  // bad arguments or unreadable files
  kParseError = 2,
  kValidationError = 3,
  kNotBilaterallyComplete = 4,
  kBudgetExceeded = 5,
  kVerificationMismatch = 6,
  kInternalError = 7,
};

/// Runs one command line. `args` excludes the program name, e.g.
/// {"solve", "figure1.graph", "--machine"}.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// "triangles=40,bc-edges=14,bc-vertices=14,seconds=30"; omitted keys keep
/// their defaults. Throws std::invalid_argument on malformed input.
OracleBudget parse_budget(std::string_view text);

}  // namespace tripack::cli
