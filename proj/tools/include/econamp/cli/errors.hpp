#pragma once

#include <cstddef>
#include <string>

#include "econamp/errors.hpp"

namespace econamp::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitParse = 3;
inline constexpr int kExitSolver = 4;

/// Bad command line or unreadable input path.
class UsageError : public Error {
 public:
  using Error::Error;
};

/// Malformed config or CSV content. `line` is 1-based; 0 means the whole file.
class ParseError : public Error {
 public:
  ParseError(const std::string& source, std::size_t line, const std::string& message)
      : Error(source + (line ? ":" + std::to_string(line) : std::string()) + ": " + message),
        line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

}  // namespace econamp::cli
