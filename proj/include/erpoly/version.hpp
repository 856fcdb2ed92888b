#pragma once

namespace erpoly {

inline constexpr const char* kVersion = "0.1.0";

// Version of the JSON output formats emitted by the CLI (see schemas/).
inline constexpr const char* kSchemaVersion = "1";

}  // namespace erpoly
