#pragma once

#include <array>
#include <cstdint>
#include <string_view>

namespace ditrail::detail {

// Minimal FIPS 180-4 SHA-256, enough for content hashing of small inputs.
std::array<std::uint8_t, 32> sha256(std::string_view bytes);

}  // namespace ditrail::detail
