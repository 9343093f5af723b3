#pragma once

#include <string_view>

namespace dcaudit {

inline constexpr std::string_view kToolName = "dcaudit";
inline constexpr std::string_view kToolVersion = "0.1.0";

} // namespace dcaudit
