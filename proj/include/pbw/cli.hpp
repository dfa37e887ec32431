#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace pbw {

/// Runs one `pbw` invocation. `args` excludes the program name.
/// Returns 0 when every verdict passes, 1 when one fails or a computation
/// is refused, 2 on malformed input or usage.
int run_command(const std::vector<std::string>& args, std::ostream& out,
                std::ostream& err);

}  // namespace pbw
