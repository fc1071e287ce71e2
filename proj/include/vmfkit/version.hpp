#pragma once

namespace vmfkit {

inline constexpr const char* version = "0.1.0";

}  // namespace vmfkit
