#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace netmed {

// Coarse classification used by the CLI to pick an exit code.
enum class ErrorCategory {
  kConfig,      // invalid parameters or usage
  kData,        // malformed or incompatible input data
  kDegenerate,  // mathematically undefined quantity (0/0 and friends)
};

const char* to_string(ErrorCategory category);

class Error : public std::runtime_error {
 public:
  Error(ErrorCategory category, std::string kind, const std::string& message);

  ErrorCategory category() const noexcept { return category_; }
  // Stable machine-readable name, e.g. "EmptyUnion".
  const std::string& kind() const noexcept { return kind_; }

 private:
  ErrorCategory category_;
  std::string kind_;
};

#define NETMED_DECLARE_ERROR(Name, Category)                      \
  class Name : public Error {                                     \
   public:                                                        \
    explicit Name(const std::string& message)                     \
        : Error(ErrorCategory::Category, #Name, message) {}       \
  }

NETMED_DECLARE_ERROR(InvalidArgument, kConfig);
NETMED_DECLARE_ERROR(UniverseMismatch, kData);
NETMED_DECLARE_ERROR(EmptyInput, kData);
NETMED_DECLARE_ERROR(UnknownLayer, kData);
NETMED_DECLARE_ERROR(TooFewEdges, kData);
NETMED_DECLARE_ERROR(EmptyUnion, kDegenerate);
NETMED_DECLARE_ERROR(EmptyConditionedUnion, kDegenerate);
NETMED_DECLARE_ERROR(DegenerateDenominator, kDegenerate);
NETMED_DECLARE_ERROR(InsufficientPairs, kDegenerate);
NETMED_DECLARE_ERROR(NoVacantPair, kDegenerate);
NETMED_DECLARE_ERROR(EmptyEnsemble, kDegenerate);
NETMED_DECLARE_ERROR(NonMonotonicEdges, kConfig);

#undef NETMED_DECLARE_ERROR

class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& message);

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

}  // namespace netmed
