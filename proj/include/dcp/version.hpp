#pragma once

namespace dcp {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace dcp
