#pragma once

namespace d4 {
inline constexpr const char* kVersion = "0.1.0";
}
