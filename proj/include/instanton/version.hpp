#pragma once

namespace instanton {

inline constexpr const char* kArtifactVersion = "1.0.0";
inline constexpr int kReportSchemaVersion = 1;

}  // namespace instanton
