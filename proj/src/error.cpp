#include "fagnano/error.hpp"

namespace fagnano {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::DegenerateTriangle: return "DegenerateTriangle";
    case ErrorCode::NotAcute: return "NotAcute";
    case ErrorCode::PointOffEdge: return "PointOffEdge";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::InfeasibleSchedule: return "InfeasibleSchedule";
    case ErrorCode::NotCyclic: return "NotCyclic";
    case ErrorCode::NoReductionWindow: return "NoReductionWindow";
    case ErrorCode::OutsideChannel: return "OutsideChannel";
    case ErrorCode::ProjectionEscapesEdge: return "ProjectionEscapesEdge";
    case ErrorCode::SchemaError: return "SchemaError";
    case ErrorCode::InvariantViolation: return "InvariantViolation";
  }
  return "Unknown";
}

}  // namespace fagnano
