#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "alexkit/knot_codes.hpp"

namespace alexkit::cli {

/// Exit codes of the command-line tool.
inline constexpr int kOk = 0;
inline constexpr int kFailure = 1;
inline constexpr int kInputError = 2;
inline constexpr int kDomainError = 3;

/// Runs `alexkit` on the arguments (excluding the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Cross-route consistency of each entry (Fox on the stored code, Fox on the
/// braid closure, Burau minor, closed DSL tangle) against its expected
/// polynomial. Prints one line per entry; true when every check passed.
bool run_selftest(const std::vector<CatalogEntry>& entries, std::ostream& out);

}  // namespace alexkit::cli
