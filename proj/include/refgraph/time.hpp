#pragma once

#include <chrono>
#include <string>
#include <string_view>

namespace refgraph {

/// UTC instant at one-second resolution.
using Timestamp = std::chrono::sys_seconds;

/// Parses an ISO-8601 date-time: `YYYY-MM-DDTHH:MM:SS` with optional fractional
/// seconds (truncated) and a `Z` or `+HH:MM` / `+HHMM` / `+HH` offset. A space is
/// accepted in place of `T`. No offset means UTC. Throws ParseError.
Timestamp parse_timestamp(std::string_view text);

/// `YYYY-MM-DDTHH:MM:SSZ`
std::string format_timestamp(Timestamp ts);

/// `YYYY-MM-DD`
std::string format_date(Timestamp ts);

}  // namespace refgraph
