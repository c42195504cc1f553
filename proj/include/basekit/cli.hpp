#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace basekit {

inline constexpr const char* kToolVersion = "0.1.0";

/// Runs the command-line front end. Returns the process exit code:
/// 0 on completion (including not-established certificates), nonzero on
/// parse or runtime errors.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace basekit
