#pragma once

namespace terj {

inline constexpr const char* kVersion = "1.0.0";

} // namespace terj
