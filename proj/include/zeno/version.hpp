#pragma once

namespace zeno {

inline constexpr const char* kVersion = "1.0.0";

}  // namespace zeno
