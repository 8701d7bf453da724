#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace pentile::cli {

enum ExitCode : int { kOk = 0, kInvalid = 1, kUsage = 2, kBudget = 3 };

// args excludes the program name. Files named "-" are read from `in`.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace pentile::cli
