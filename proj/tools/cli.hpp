#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace toricmult::cli {

/// Exit codes: 0 success, 1 verification mismatch, 2 parse/usage error, 3 validation error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace toricmult::cli
