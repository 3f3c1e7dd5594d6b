#pragma once

namespace subrad {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace subrad
