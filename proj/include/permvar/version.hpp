#pragma once

namespace permvar {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace permvar
