#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace cactusnet {

/// Entry point of the `cactusnet` tool. `args` excludes the program name.
/// Returns 0 on success and 1 on any verification failure or error, with the
/// diagnostic written to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace cactusnet
