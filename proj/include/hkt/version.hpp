#pragma once

namespace hkt {

inline constexpr const char* kVersion = "1.0.0";
inline constexpr const char* kFixtureVersion = "1";

}  // namespace hkt
