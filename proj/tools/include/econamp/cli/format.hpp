#pragma once

#include <optional>
#include <string>
#include <string_view>

namespace econamp::cli {

/// Shortest decimal string that parses back to exactly `value`.
std::string format_exact(double value);

/// Six significant digits, for human-readable tables.
std::string format_human(double value);

/// format_exact, or "NA" when absent.
std::string format_exact(const std::optional<double>& value);
std::string format_human(const std::optional<double>& value);

/// Strict locale-independent parse of a whole token; std::nullopt on any junk.
std::optional<double> parse_number(std::string_view text);

std::string_view trim(std::string_view text);

}  // namespace econamp::cli
