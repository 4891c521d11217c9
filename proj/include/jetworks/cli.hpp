#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace jetworks::cli {

// Runs one invocation; args excludes the program name. Returns the exit
// code: 0 success, 1 usage or parse error, 2 mathematical inconsistency,
// 3 resource limit.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace jetworks::cli
