#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace susa::cli {

/// Exit statuses: success, domain error, usage error.
inline constexpr int kOk = 0;
inline constexpr int kDomainError = 1;
inline constexpr int kUsageError = 2;

/// Runs one command. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace susa::cli
