#pragma once

namespace qcwalk {

inline constexpr const char* kVersion = "1.0.0";

}  // namespace qcwalk
