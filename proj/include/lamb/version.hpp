#pragma once

namespace lamb {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace lamb
