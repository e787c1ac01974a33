#pragma once

#include <stdexcept>
#include <string>

namespace netpot {

/// Base class for all library errors.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

#define NETPOT_DEFINE_ERROR(Name)                                  \
  class Name : public Error {                                      \
   public:                                                         \
    explicit Name(const std::string& what) : Error(#Name ": " + what) {} \
  }

NETPOT_DEFINE_ERROR(ParseError);
NETPOT_DEFINE_ERROR(DisconnectedGraph);
NETPOT_DEFINE_ERROR(InvalidConductance);
NETPOT_DEFINE_ERROR(DuplicateEdge);
NETPOT_DEFINE_ERROR(UnknownVertex);
NETPOT_DEFINE_ERROR(SingularSystem);
NETPOT_DEFINE_ERROR(DepthViolation);
NETPOT_DEFINE_ERROR(SameVertex);
NETPOT_DEFINE_ERROR(NonIntegralCount);
NETPOT_DEFINE_ERROR(TotalMismatch);
NETPOT_DEFINE_ERROR(NegativeB);
NETPOT_DEFINE_ERROR(FormMismatch);
NETPOT_DEFINE_ERROR(DistanceOutOfRange);
NETPOT_DEFINE_ERROR(DiameterTooSmall);
NETPOT_DEFINE_ERROR(NonIntegralRecovery);
NETPOT_DEFINE_ERROR(ParamOutOfRange);
NETPOT_DEFINE_ERROR(InconsistentParams);

#undef NETPOT_DEFINE_ERROR

}  // namespace netpot
