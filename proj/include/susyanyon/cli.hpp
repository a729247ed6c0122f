#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace susyanyon {

// Exit codes: 0 success, 1 verification failure, 2 usage/capacity error.
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

}  // namespace susyanyon
