#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace mwtate::cli {

/// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kMalformed = 1;
inline constexpr int kValidationFailure = 2;
inline constexpr int kUsage = 64;

/// Runs one command; args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace mwtate::cli
