#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace fagnano {

enum class ErrorCode {
  DegenerateTriangle,
  NotAcute,
  PointOffEdge,
  InvalidArgument,
  InfeasibleSchedule,
  NotCyclic,
  NoReductionWindow,
  OutsideChannel,
  ProjectionEscapesEdge,
  SchemaError,
  InvariantViolation,
};

std::string_view to_string(ErrorCode code);

/// Domain error raised by every library operation. `code()` is stable and is
/// what the CLI reports; the message is for humans.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace fagnano
