#pragma once

namespace riskregion {

inline constexpr const char* kToolName = "riskregion";
inline constexpr const char* kToolVersion = "0.1.0";

}  // namespace riskregion
