#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace cpw::cli {

// Runs the command line tool against explicit streams (testable without a
// process spawn).  Returns the exit code: 0 success / property holds,
// 1 property fails, 2 usage or resource errors.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace cpw::cli
