#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace abps::cli {

/// Runs one command line. Usage errors return 2, domain errors 1 with the error name on `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace abps::cli
