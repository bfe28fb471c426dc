#pragma once

#include <string_view>

namespace ebdiv {

inline constexpr std::string_view kToolName = "ebdiv";
inline constexpr std::string_view kVersion = "0.1.0";

}  // namespace ebdiv
