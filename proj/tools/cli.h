#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace pqa {

// Exit codes.
constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitData = 2;

// Entry point behind the pqa executable. args excludes the program name.
int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
            std::ostream& err);

}  // namespace pqa
