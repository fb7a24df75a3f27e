#include "fuzzytorus/error.hpp"

namespace fuzzytorus {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::NonPositiveOrder: return "NonPositiveOrder";
    case ErrorKind::NotCoprime: return "NotCoprime";
    case ErrorKind::DegenerateRoot: return "DegenerateRoot";
    case ErrorKind::NonRealResult: return "NonRealResult";
    case ErrorKind::DegenerateMetric: return "DegenerateMetric";
    case ErrorKind::DegenerateDeformation: return "DegenerateDeformation";
    case ErrorKind::ShapeMismatch: return "ShapeMismatch";
    case ErrorKind::OddDimension: return "OddDimension";
    case ErrorKind::WrongSpinStructure: return "WrongSpinStructure";
    case ErrorKind::ParityMismatch: return "ParityMismatch";
    case ErrorKind::OrderMismatch: return "OrderMismatch";
    case ErrorKind::SectorLeak: return "SectorLeak";
    case ErrorKind::ConjectureViolation: return "ConjectureViolation";
    case ErrorKind::NotHermitian: return "NotHermitian";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

}  // namespace fuzzytorus
