#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace coxtile {

// Exit codes: 0 success, 1 validation failure, 2 bad arguments.
int cli_main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);
int cli_main(int argc, char** argv);

}  // namespace coxtile
