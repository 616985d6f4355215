#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace vtool {

// full CLI: args without the program name; returns the process exit code
// (0 ok, 1 usage or parse error, 2 domain refusal, 3 resource cap)
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace vtool
