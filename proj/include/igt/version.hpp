#pragma once

namespace igt {

inline constexpr const char* version = "0.1.0";

} // namespace igt
