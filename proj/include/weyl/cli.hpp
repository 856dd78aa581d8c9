#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace weyl::cli {

/// Runs one invocation; args exclude the program name.
/// Returns 0 on success, 1 on domain errors, 2 on parse or usage errors.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace weyl::cli
