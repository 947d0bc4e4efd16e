#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace tropadic::cli {

/// Runs one subcommand. Arguments exclude the program name. Returns 0 on
/// success, 2 when the input is well formed but fails validation, 1 on
/// malformed input; failures print {"error", "message"} to err.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace tropadic::cli
