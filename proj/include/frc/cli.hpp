#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace frc {

// Exit codes: 0 success, 1 a check failed or a domain error occurred,
// 2 usage or parse error.
inline constexpr int kExitOk = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitUsage = 2;

// args excludes the program name. FRC_BUDGET in the environment overrides the
// enumeration cap.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace frc
