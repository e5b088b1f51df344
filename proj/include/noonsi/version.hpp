#pragma once

namespace noonsi {

inline constexpr const char* kVersion = "1.0.0";

} // namespace noonsi
