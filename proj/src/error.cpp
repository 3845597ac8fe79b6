#include "planembed/error.hpp"

namespace planembed {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::UnknownVertex: return "UnknownVertex";
    case ErrorCode::DuplicateVertex: return "DuplicateVertex";
    case ErrorCode::EmptyGraph: return "EmptyGraph";
    case ErrorCode::AsymmetricRotation: return "AsymmetricRotation";
    case ErrorCode::SelfLoop: return "SelfLoop";
    case ErrorCode::DuplicateEdge: return "DuplicateEdge";
    case ErrorCode::NonPlanarRotation: return "NonPlanarRotation";
    case ErrorCode::OuterFaceNotFound: return "OuterFaceNotFound";
    case ErrorCode::FacesNotAdjacent: return "FacesNotAdjacent";
    case ErrorCode::IntersectionDisconnected: return "IntersectionDisconnected";
    case ErrorCode::InstanceTooLarge: return "InstanceTooLarge";
    case ErrorCode::FacesNotSimple: return "FacesNotSimple";
    case ErrorCode::NotTriangulated: return "NotTriangulated";
    case ErrorCode::NotBiconnected: return "NotBiconnected";
    case ErrorCode::NotConnected: return "NotConnected";
    case ErrorCode::OuterNotSimpleCycle: return "OuterNotSimpleCycle";
    case ErrorCode::InvalidWeights: return "InvalidWeights";
    case ErrorCode::PlacementMismatch: return "PlacementMismatch";
    case ErrorCode::NonConvexPlacement: return "NonConvexPlacement";
    case ErrorCode::SingularSystem: return "SingularSystem";
    case ErrorCode::InaccurateSolve: return "InaccurateSolve";
    case ErrorCode::CycleTooShort: return "CycleTooShort";
    case ErrorCode::MissingCoordinate: return "MissingCoordinate";
    case ErrorCode::SampleOnEdge: return "SampleOnEdge";
    case ErrorCode::DegenerateFace: return "DegenerateFace";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

}  // namespace planembed
