#pragma once

namespace crofton {

inline constexpr const char* kVersion = "0.1.0";

/// Stable identifier of the CLI report JSON layout.
inline constexpr const char* kReportSchema = "crofton-inconstancy/1";

}  // namespace crofton
