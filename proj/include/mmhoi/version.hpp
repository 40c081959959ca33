#pragma once

namespace mmhoi {
inline constexpr const char* kVersion = "0.1.0";
}
