#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace higgs_lab {

/// Exit codes: 0 all checks pass, 1 a check failed, 2 bad input.
inline constexpr int kExitOk = 0;
inline constexpr int kExitCheckFailure = 1;
inline constexpr int kExitInputError = 2;

/// `args` excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace higgs_lab
