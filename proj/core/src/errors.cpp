#include "netmed/errors.hpp"

#include <utility>

namespace netmed {

const char* to_string(ErrorCategory category) {
  switch (category) {
    case ErrorCategory::kConfig:
      return "config";
    case ErrorCategory::kData:
      return "data";
    case ErrorCategory::kDegenerate:
      return "degenerate";
  }
  return "unknown";
}

Error::Error(ErrorCategory category, std::string kind, const std::string& message)
    : std::runtime_error(message), category_(category), kind_(std::move(kind)) {}

ParseError::ParseError(std::size_t line, const std::string& message)
    : Error(ErrorCategory::kData, "ParseError",
            "line " + std::to_string(line) + ": " + message),
      line_(line) {}

}  // namespace netmed
