#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace planembed {

enum class ErrorCode {
  // plane_graph
  UnknownVertex,
  DuplicateVertex,
  EmptyGraph,
  AsymmetricRotation,
  SelfLoop,
  DuplicateEdge,
  NonPlanarRotation,
  OuterFaceNotFound,
  FacesNotAdjacent,
  IntersectionDisconnected,
  // connectivity_analysis
  InstanceTooLarge,
  FacesNotSimple,
  NotTriangulated,
  // triangulate
  NotBiconnected,
  // solver
  NotConnected,
  OuterNotSimpleCycle,
  InvalidWeights,
  PlacementMismatch,
  NonConvexPlacement,
  SingularSystem,
  InaccurateSolve,
  CycleTooShort,
  // validator
  MissingCoordinate,
  SampleOnEdge,
  DegenerateFace,
  // io / cli
  ParseError,
  InvalidArgument,
};

std::string_view to_string(ErrorCode code);

/// Exception type thrown by every module. The code identifies the failure,
/// the message names the offending vertex, edge or field.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace planembed
