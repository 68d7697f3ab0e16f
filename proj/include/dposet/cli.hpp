#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace dposet {

// Full command-line front end; returns the process exit code
// (0 success, 1 usage error, 2 domain error).
int cli_main(const std::vector<std::string>& args, std::ostream& out,
             std::ostream& err);

} // namespace dposet
