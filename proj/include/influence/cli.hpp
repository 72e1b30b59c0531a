#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace influence {

// Full command-line surface: subcommands solve, approx, fpt-decide, generate,
// verify, bench. Returns 0 on success, 1 when a solver hit its exploration
// cap, 2 on usage or input errors.
int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace influence
