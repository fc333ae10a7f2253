// cli.hpp -- command-line front end

#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace litt::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitViolation = 1;
inline constexpr int kExitUsage = 2;

/// Runs one command. args[0] is the program name. Results go to `out`,
/// diagnostics to `err`. Returns 0 on success, 1 when a verification finds
/// a violation, 2 on usage or guard errors.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace litt::cli
