#pragma once

namespace sepcode {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace sepcode
