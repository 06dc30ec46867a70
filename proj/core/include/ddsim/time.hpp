#pragma once

#include <chrono>
#include <optional>
#include <string>
#include <string_view>

namespace ddsim {

// All instants are UTC with millisecond resolution.
using Duration = std::chrono::milliseconds;
using Timestamp = std::chrono::sys_time<Duration>;

/// Parses `YYYY-MM-DDTHH:MM:SS[.fff][Z|±HH:MM]`. A space is accepted in place
/// of `T`; fractional digits beyond milliseconds are truncated. Returns
/// nullopt on malformed input.
std::optional<Timestamp> parse_timestamp(std::string_view text);

/// Canonical form `YYYY-MM-DDTHH:MM:SS.mmm+00:00`.
std::string format_timestamp(Timestamp t);

inline double to_seconds(Duration d) { return static_cast<double>(d.count()) / 1000.0; }

/// Rounds to the nearest millisecond.
Duration from_seconds(double seconds);

}  // namespace ddsim
