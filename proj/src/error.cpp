#include "lattower/error.hpp"

namespace lattower {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::DegreeTooSmall: return "DegreeTooSmall";
    case ErrorKind::DegreeTooLarge: return "DegreeTooLarge";
    case ErrorKind::NegativeExponent: return "NegativeExponent";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::ChainLengthMismatch: return "ChainLengthMismatch";
    case ErrorKind::WidthMismatch: return "WidthMismatch";
    case ErrorKind::BadCoordinate: return "BadCoordinate";
    case ErrorKind::UnitVectorInH: return "UnitVectorInH";
    case ErrorKind::DeadCoordinate: return "DeadCoordinate";
    case ErrorKind::IllegalChainPosition: return "IllegalChainPosition";
    case ErrorKind::InvalidProfile: return "InvalidProfile";
    case ErrorKind::SpecMismatch: return "SpecMismatch";
    case ErrorKind::TooLarge: return "TooLarge";
    case ErrorKind::NotMixed: return "NotMixed";
    case ErrorKind::ClassViolation: return "ClassViolation";
    case ErrorKind::NotTowerGroup: return "NotTowerGroup";
    case ErrorKind::NonTermination: return "NonTermination";
    case ErrorKind::Mismatch: return "Mismatch";
  }
  return "Unknown";
}

}  // namespace lattower
