#pragma once

namespace gzl {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace gzl
