#pragma once

#include <stdexcept>
#include <string>

namespace cornerforge {

// Thrown when a computation would exceed a configured or structural limit
// (enumeration caps, oracle grid cap, table sizes). Distinct from domain
// errors so callers can map it to a different exit code.
class ResourceError : public std::runtime_error {
 public:
  explicit ResourceError(const std::string& what, std::string detail = {})
      : std::runtime_error(what), detail_(std::move(detail)) {}

  // Machine-readable payload, e.g. the exact count an enumeration would
  // have produced. Empty when not applicable.
  const std::string& detail() const noexcept { return detail_; }

 private:
  std::string detail_;
};

// Malformed input file. line() is 1-based.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, long line)
      : std::runtime_error("line " + std::to_string(line) + ": " + what),
        line_(line) {}

  long line() const noexcept { return line_; }

 private:
  long line_;
};

}  // namespace cornerforge
