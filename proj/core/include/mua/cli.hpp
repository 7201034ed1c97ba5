// Command-line surface. run_cli takes argv without the program name and
// writes deterministic text; exit status 0 = success, 1 = usage error,
// 2 = input/parse error.
#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace mua {

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

}  // namespace mua
