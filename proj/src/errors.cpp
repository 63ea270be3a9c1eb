#include "trisect/types.hpp"

namespace trisect {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::NotSquare: return "NotSquare";
    case ErrorKind::NotSymmetric: return "NotSymmetric";
    case ErrorKind::Degenerate: return "Degenerate";
    case ErrorKind::NotUnimodular: return "NotUnimodular";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::NotIsotropic: return "NotIsotropic";
    case ErrorKind::NotPrimitive: return "NotPrimitive";
    case ErrorKind::WrongRank: return "WrongRank";
    case ErrorKind::InvalidDiagram: return "InvalidDiagram";
    case ErrorKind::NonInvertiblePairing: return "NonInvertiblePairing";
    case ErrorKind::AsymmetricResult: return "AsymmetricResult";
    case ErrorKind::StandardizationFailed: return "StandardizationFailed";
    case ErrorKind::InvalidChain: return "InvalidChain";
    case ErrorKind::NoIntegerSolution: return "NoIntegerSolution";
    case ErrorKind::OddRank: return "OddRank";
    case ErrorKind::DegeneratePairing: return "DegeneratePairing";
    case ErrorKind::InvalidBasis: return "InvalidBasis";
    case ErrorKind::IncompleteLinkingData: return "IncompleteLinkingData";
    case ErrorKind::OddForm: return "OddForm";
    case ErrorKind::ParseError: return "ParseError";
  }
  return "Unknown";
}

}  // namespace trisect
