#include "orientcalc/errors.hpp"

namespace orientcalc {

std::string_view kind_name(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::UndeclaredVariable: return "UndeclaredVariable";
    case ErrorKind::RingMismatch: return "RingMismatch";
    case ErrorKind::NotHomogeneous: return "NotHomogeneous";
    case ErrorKind::NotAUnit: return "NotAUnit";
    case ErrorKind::NonTerminating: return "NonTerminating";
    case ErrorKind::TruncationTooSmall: return "TruncationTooSmall";
    case ErrorKind::NotSymmetric: return "NotSymmetric";
    case ErrorKind::NotInvertible: return "NotInvertible";
    case ErrorKind::NoSolution: return "NoSolution";
    case ErrorKind::AmbiguousSolution: return "AmbiguousSolution";
    case ErrorKind::LayoutInconsistent: return "LayoutInconsistent";
    case ErrorKind::InsufficientCoefficients: return "InsufficientCoefficients";
    case ErrorKind::InvalidRing: return "InvalidRing";
    case ErrorKind::ExponentOverflow: return "ExponentOverflow";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::ConfigError: return "ConfigError";
  }
  return "Unknown";
}

}  // namespace orientcalc
