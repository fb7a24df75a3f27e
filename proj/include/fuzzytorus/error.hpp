#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace fuzzytorus {

enum class ErrorKind {
  NonPositiveOrder,
  NotCoprime,
  DegenerateRoot,
  NonRealResult,
  DegenerateMetric,
  DegenerateDeformation,
  ShapeMismatch,
  OddDimension,
  WrongSpinStructure,
  ParityMismatch,
  OrderMismatch,
  SectorLeak,
  ConjectureViolation,
  NotHermitian,
  InvalidArgument,
};

std::string_view to_string(ErrorKind kind);

// Every failure raised by the library carries a machine-readable kind so the
// CLI can map it onto an error JSON object and exit status.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace fuzzytorus
