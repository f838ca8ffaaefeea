#pragma once

#include <string>
#include <vector>

namespace superhowe::cli {

// Exit code contract: 0 success, 2 mathematical audit failure, 64 usage error.
inline constexpr int kExitOk = 0;
inline constexpr int kExitAuditFailure = 2;
inline constexpr int kExitUsage = 64;

int run(int argc, const char* const* argv);
int run(const std::vector<std::string>& args);  // without argv[0]

}  // namespace superhowe::cli
