#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace alexlab::cli {

/// Exit codes: 0 report produced, 1 a verification-style check failed,
/// 2 malformed input (one diagnostic line on `err`).
inline constexpr int kOk = 0;
inline constexpr int kCheckFailed = 1;
inline constexpr int kInputError = 2;

/// `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Pipeline level cap: ALEXLAB_LEVELS_MAX if set to a positive integer, else 12.
std::size_t levels_cap();

}  // namespace alexlab::cli
