#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace aqstar::cli {

// args[0] is the program name. Exit codes: 0 when every asserted check
// holds, 1 when one fails, 2 on usage errors (bad flags, unparsable or
// invalid inputs).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

// Every subcommand name, in help order.
const std::vector<std::string>& command_names();

}  // namespace aqstar::cli
