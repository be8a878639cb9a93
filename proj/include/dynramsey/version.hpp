#pragma once

namespace dynramsey {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace dynramsey
