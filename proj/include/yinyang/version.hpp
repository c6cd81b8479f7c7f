#pragma once

namespace yinyang {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace yinyang
