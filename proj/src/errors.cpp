#include "tetra/errors.hpp"

namespace tetra {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::DegreeExceedsReflectionIndex: return "DegreeExceedsReflectionIndex";
    case ErrorKind::ZeroPolynomialHasAllRoots: return "ZeroPolynomialHasAllRoots";
    case ErrorKind::PsiPole: return "PsiPole";
    case ErrorKind::NotTwoNSymmetric: return "NotTwoNSymmetric";
    case ErrorKind::NotNonnegativeOnCircle: return "NotNonnegativeOnCircle";
    case ErrorKind::OddCircleRootOrder: return "OddCircleRootOrder";
    case ErrorKind::FactorizationInaccurate: return "FactorizationInaccurate";
    case ErrorKind::DegreeBound: return "DegreeBound";
    case ErrorKind::DVanishesInDisc: return "DVanishesInDisc";
    case ErrorKind::ReflectionMismatch: return "ReflectionMismatch";
    case ErrorKind::ModulusDomination: return "ModulusDomination";
    case ErrorKind::DenominatorVanishes: return "DenominatorVanishes";
    case ErrorKind::SamplingTooCoarse: return "SamplingTooCoarse";
    case ErrorKind::RoyalVarietyFunction: return "RoyalVarietyFunction";
    case ErrorKind::InvalidSuperficialSpec: return "InvalidSuperficialSpec";
    case ErrorKind::UndefinedOmegaOrK: return "UndefinedOmegaOrK";
    case ErrorKind::GammaInnerPrecondition: return "GammaInnerPrecondition";
    case ErrorKind::IdenticallyZeroComponent: return "IdenticallyZeroComponent";
    case ErrorKind::NodeOutsideClosedDisc: return "NodeOutsideClosedDisc";
    case ErrorKind::NodeZeroCollision: return "NodeZeroCollision";
    case ErrorKind::InvalidConstructionSpec: return "InvalidConstructionSpec";
    case ErrorKind::ConstructionInconsistent: return "ConstructionInconsistent";
    case ErrorKind::ThirdComponentMismatch: return "ThirdComponentMismatch";
    case ErrorKind::CircleNodesPresent: return "CircleNodesPresent";
    case ErrorKind::NumericalSupAtOne: return "NumericalSupAtOne";
    case ErrorKind::ExtremalityNotDisproved: return "ExtremalityNotDisproved";
    case ErrorKind::NotSymmetric: return "NotSymmetric";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

bool is_precondition(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::FactorizationInaccurate:
    case ErrorKind::ConstructionInconsistent:
    case ErrorKind::SamplingTooCoarse:
    case ErrorKind::NumericalSupAtOne:
    case ErrorKind::OddCircleRootOrder:
      return false;
    default:
      return true;
  }
}

}  // namespace tetra
