#pragma once

#include <string_view>

namespace eurkit {

inline constexpr std::string_view kToolName = "eurkit";
inline constexpr std::string_view kToolVersion = "0.1.0";

}  // namespace eurkit
