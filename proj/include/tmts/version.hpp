#pragma once

namespace tmts {

inline constexpr const char* kVersion = "1.0.0";

}  // namespace tmts
