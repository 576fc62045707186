#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace hgraph {

enum class ErrorKind {
  CurvesCross,
  BadPinch,
  HypothesisViolated,
  BadPartition,
  NoGoodComponent,
  PathOutside,
  WitnessNotFound,
  DegenerateCell,
  NoConvergence,
  GradientBlowup,
  BadRadius,
  BadWidth,
  PointOutside,
  NoContact,
  BadRectangle,
  ReductionFailed,
  WindowOutside,
  InvalidArgument,
  ConfigError,
  IoError,
};

std::string_view to_string(ErrorKind kind);

/// Typed failure raised by every operation in the library.
///
/// `detail()` carries the integer payload some kinds need: the hypothesis
/// number for HypothesisViolated, the iteration count for NoConvergence.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message, int detail = 0)
      : std::runtime_error(std::string(to_string(kind)) + ": " + message),
        kind_(kind),
        detail_(detail) {}

  ErrorKind kind() const noexcept { return kind_; }
  int detail() const noexcept { return detail_; }

 private:
  ErrorKind kind_;
  int detail_;
};

}  // namespace hgraph
