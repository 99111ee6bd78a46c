#pragma once

#include <iostream>
#include <string>
#include <vector>

namespace crystal {

// Entry point behind the command-line binary; takes the argument list without
// the program name.  Reads/writes the shared JSON schemas on the streams and
// returns the process exit status.
int cli_main(const std::vector<std::string>& args, std::istream& in,
             std::ostream& out, std::ostream& err);

}  // namespace crystal
