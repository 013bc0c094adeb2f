#pragma once

namespace nabla {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace nabla
