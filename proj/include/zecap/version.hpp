#pragma once

namespace zecap {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace zecap
