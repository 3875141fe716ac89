#pragma once

#include <string_view>

namespace ditrail {

inline constexpr std::string_view kVersion = "0.1.0";

}  // namespace ditrail
