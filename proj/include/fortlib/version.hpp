#pragma once

namespace fortlib {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace fortlib
