#pragma once

namespace dtpt {

// Bumping this invalidates every on-disk cache record.
inline constexpr const char* kCodeVersion = "dtpt-0.1.0";

// Report files carry their own schema tag so consumers can detect drift.
inline constexpr const char* kReportSchema = "dtpt-report/1";

} // namespace dtpt
