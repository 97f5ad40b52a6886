#pragma once

#include <stdexcept>
#include <string>

namespace idkit {

// Base class for all toolkit errors.
class Error : public std::runtime_error {
public:
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

#define IDKIT_DEFINE_ERROR(NAME)                                  \
  class NAME : public Error {                                     \
  public:                                                         \
    explicit NAME(const std::string& msg = #NAME) : Error(msg) {} \
  }

IDKIT_DEFINE_ERROR(ParseError);
IDKIT_DEFINE_ERROR(DimensionMismatch);
IDKIT_DEFINE_ERROR(DivisionByZero);
IDKIT_DEFINE_ERROR(CyclingGuardExceeded);
IDKIT_DEFINE_ERROR(PointNotInSet);
IDKIT_DEFINE_ERROR(PointNotInDomain);
IDKIT_DEFINE_ERROR(EmptyPolyhedron);
IDKIT_DEFINE_ERROR(Unbounded);
IDKIT_DEFINE_ERROR(FaceBudgetExceeded);
IDKIT_DEFINE_ERROR(EliminationBudgetExceeded);
IDKIT_DEFINE_ERROR(PairNotInGraph);
IDKIT_DEFINE_ERROR(QualificationFailure);
IDKIT_DEFINE_ERROR(NotConvex);
IDKIT_DEFINE_ERROR(NotASubgradient);
IDKIT_DEFINE_ERROR(EmptyMultiplierSet);
IDKIT_DEFINE_ERROR(NotANormal);
IDKIT_DEFINE_ERROR(NotCritical);
IDKIT_DEFINE_ERROR(UnsupportedDescriptor);
IDKIT_DEFINE_ERROR(EquivalenceViolation);
IDKIT_DEFINE_ERROR(InvalidGrowthFunction);
IDKIT_DEFINE_ERROR(InvalidManifold);
IDKIT_DEFINE_ERROR(InvalidSplit);
IDKIT_DEFINE_ERROR(StrictComplementarityRequired);

#undef IDKIT_DEFINE_ERROR

}  // namespace idkit
