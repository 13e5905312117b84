#include "econamp/cli/format.hpp"

#include <array>
#include <charconv>
#include <cmath>
#include <cstdio>

namespace econamp::cli {

std::string format_exact(double value) {
  std::array<char, 64> buf{};
  auto [end, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), value);
  return std::string(buf.data(), end);
}

std::string format_human(double value) {
  std::array<char, 64> buf{};
  // Normalise -0 so identical results print identically.
  if (value == 0.0) value = 0.0;
  std::snprintf(buf.data(), buf.size(), "%.6g", value);
  return std::string(buf.data());
}

std::string format_exact(const std::optional<double>& value) {
  return value ? format_exact(*value) : std::string("NA");
}

std::string format_human(const std::optional<double>& value) {
  return value ? format_human(*value) : std::string("n/a");
}

std::string_view trim(std::string_view text) {
  constexpr std::string_view ws = " \t\r\n";
  const auto first = text.find_first_not_of(ws);
  if (first == std::string_view::npos) return {};
  const auto last = text.find_last_not_of(ws);
  return text.substr(first, last - first + 1);
}

std::optional<double> parse_number(std::string_view text) {
  text = trim(text);
  if (text.empty()) return std::nullopt;
  // from_chars rejects a leading '+'; accept it for hand-written configs.
  if (text.front() == '+') text.remove_prefix(1);
  double value = 0.0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size() || !std::isfinite(value))
    return std::nullopt;
  return value;
}

}  // namespace econamp::cli
