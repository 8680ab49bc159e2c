#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace fullgroup::cli {

/// Runs one command. Exit codes: 0 success, 1 internal error, 2 validation
/// error, 3 operation error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace fullgroup::cli
