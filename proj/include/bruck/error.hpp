#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace bruck {

enum class ErrorKind {
  InvalidLoop,
  ParseError,
  NoTwoSidedInverse,
  NotBol,
  NotBruck,
  NotNormal,
  OrderBoundExceeded,
  EnumerationBoundExceeded,
  NodeBudgetExceeded,
  DegreeMismatch,
  NotContained,
  NotATransversal,
  AutomorphismUnrealizable,
  UnsupportedQ,
  ClassNotFound,
  NonIntegralNJ,
  DecompositionFailed,
  ShapeMismatch,
  EvenOrder,
  InvalidArgument,
};

std::string_view to_string(ErrorKind kind) noexcept;

// All library failures are reported through this type; `kind()` is stable,
// `what()` carries a human-readable witness.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

// Size limits for the exhaustive routines.
struct Bounds {
  std::size_t order_bound = 96;             // loops handled by subloop enumeration
  std::size_t enumeration_bound = 200'000;  // groups whose elements may be listed
};

}  // namespace bruck
