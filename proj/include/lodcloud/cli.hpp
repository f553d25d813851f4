#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace lodcloud {

// Exit codes: 0 success, 1 analysis error, 2 usage error, 3 validator found
// discrepancies. args excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);
int run_cli(int argc, char** argv);

} // namespace lodcloud
