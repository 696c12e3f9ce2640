#pragma once

namespace hfsent {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace hfsent
