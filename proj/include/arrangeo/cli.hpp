#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace arrangeo::cli {

// Runs the command-line interface. Exit status: 0 on success, 1 when
// --assert is passed and the analysis verdict is negative, 2 on input
// errors.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace arrangeo::cli
