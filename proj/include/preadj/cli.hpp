#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace preadj {

/// Runs one command line (without the program name). Returns the exit
/// status: 0 success, 1 domain or usage error, 2 budget refusal.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace preadj
