#pragma once

namespace linecover {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace linecover
