#pragma once

namespace pkroots {

inline constexpr const char* kToolName = "pkroots";
inline constexpr const char* kToolVersion = "0.1.0";

} // namespace pkroots
