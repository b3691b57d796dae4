#pragma once

namespace minuscule {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace minuscule
