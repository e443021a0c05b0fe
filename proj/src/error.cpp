#include "bruck/error.hpp"

namespace bruck {

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::InvalidLoop: return "InvalidLoop";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::NoTwoSidedInverse: return "NoTwoSidedInverse";
    case ErrorKind::NotBol: return "NotBol";
    case ErrorKind::NotBruck: return "NotBruck";
    case ErrorKind::NotNormal: return "NotNormal";
    case ErrorKind::OrderBoundExceeded: return "OrderBoundExceeded";
    case ErrorKind::EnumerationBoundExceeded: return "EnumerationBoundExceeded";
    case ErrorKind::NodeBudgetExceeded: return "NodeBudgetExceeded";
    case ErrorKind::DegreeMismatch: return "DegreeMismatch";
    case ErrorKind::NotContained: return "NotContained";
    case ErrorKind::NotATransversal: return "NotATransversal";
    case ErrorKind::AutomorphismUnrealizable: return "AutomorphismUnrealizable";
    case ErrorKind::UnsupportedQ: return "UnsupportedQ";
    case ErrorKind::ClassNotFound: return "ClassNotFound";
    case ErrorKind::NonIntegralNJ: return "NonIntegralNJ";
    case ErrorKind::DecompositionFailed: return "DecompositionFailed";
    case ErrorKind::ShapeMismatch: return "ShapeMismatch";
    case ErrorKind::EvenOrder: return "EvenOrder";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

}  // namespace bruck
