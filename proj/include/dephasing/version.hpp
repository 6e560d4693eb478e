#pragma once

namespace dephasing {
inline constexpr const char* kVersion = "0.1.0";
}
