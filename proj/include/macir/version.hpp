#pragma once

namespace macir {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace macir
