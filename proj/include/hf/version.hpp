#pragma once

namespace hf {

inline constexpr const char* kToolName = "hilbertforge";
inline constexpr const char* kToolVersion = "0.3.0";

}  // namespace hf
