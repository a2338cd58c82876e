#pragma once

namespace diraccert {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace diraccert
