// Command-line front end. `quadpre <subcommand> [flags]`.

#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace quadpre {

inline constexpr const char* kVersion = "0.1.0";

/// Runs one subcommand; args exclude the program name. Returns 0 on success,
/// 1 when a mathematical check fails, 2 on usage errors.
int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace quadpre
