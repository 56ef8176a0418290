#pragma once

namespace fano {

inline constexpr const char* kToolName = "fanorank";
inline constexpr const char* kVersion = "0.1.0";

}  // namespace fano
