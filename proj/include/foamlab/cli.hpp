#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace foamlab {

// Exit status: 0 pass, 1 mathematical failure, 2 input error. args excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace foamlab
