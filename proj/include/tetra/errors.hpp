#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace tetra {

enum class ErrorKind {
  // polycx
  DegreeExceedsReflectionIndex,
  ZeroPolynomialHasAllRoots,
  // boundary
  PsiPole,
  // fejriesz
  NotTwoNSymmetric,
  NotNonnegativeOnCircle,
  OddCircleRootOrder,
  FactorizationInaccurate,
  // tetrafun
  DegreeBound,
  DVanishesInDisc,
  ReflectionMismatch,
  ModulusDomination,
  DenominatorVanishes,
  SamplingTooCoarse,
  RoyalVarietyFunction,
  InvalidSuperficialSpec,
  UndefinedOmegaOrK,
  GammaInnerPrecondition,
  IdenticallyZeroComponent,
  // construct
  NodeOutsideClosedDisc,
  NodeZeroCollision,
  InvalidConstructionSpec,
  ConstructionInconsistent,
  // extremal
  ThirdComponentMismatch,
  CircleNodesPresent,
  NumericalSupAtOne,
  ExtremalityNotDisproved,
  NotSymmetric,
  // generic
  InvalidArgument,
};

std::string_view to_string(ErrorKind kind);

/// Whether a failure of this kind reflects bad input (as opposed to a numerical
/// breakdown inside an algorithm). The CLI maps the two classes to different
/// exit codes.
bool is_precondition(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace tetra
