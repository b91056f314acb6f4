#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace dioph::cli {

inline constexpr const char* kVersion = "1.0.0";

/// Exit codes: 0 clean, 1 usage or input error, 2 violations or property
/// failures found.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace dioph::cli
