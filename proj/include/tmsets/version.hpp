#pragma once

namespace tmsets {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace tmsets
