#pragma once

namespace orthodim {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace orthodim
